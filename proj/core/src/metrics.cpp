#include "tdt/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>

#include "tdt/errors.hpp"

namespace tdt {

namespace {

void check_same(const Document& gold, const Document& pred) {
  if (gold.id != pred.id) {
    throw DocumentMismatch("document ids differ: '" + gold.id + "' vs '" + pred.id + "'");
  }
  if (gold.text != pred.text) throw DocumentMismatch("texts of '" + gold.id + "' differ");
}

bool of_kind(const Node& n, MarkableKind kind) {
  return kind == MarkableKind::Timex ? std::holds_alternative<TimexNode>(n)
                                     : std::holds_alternative<EventNode>(n);
}

std::string span_key(const Span& s) { return std::to_string(s.start) + ":" + std::to_string(s.end); }

std::string class_of(const Node& n) {
  if (const auto* t = std::get_if<TimexNode>(&n)) return to_string(t->cls);
  if (const auto* e = std::get_if<EventNode>(&n)) return to_string(e->cls);
  return {};
}

std::string parent_key(const Node& n) {
  if (const auto* m = std::get_if<MetaNode>(&n)) return std::string("meta:") + to_string(m->kind);
  return std::string(to_string(kind_of(n))) + ":" + span_key(*span_of(n));
}

using Bag = std::map<std::string, std::size_t>;

PRF match(const Bag& gold, const Bag& pred) {
  PRF out;
  for (const auto& [key, n] : gold) {
    out.gold += n;
    if (const auto it = pred.find(key); it != pred.end()) out.true_positive += std::min(n, it->second);
  }
  for (const auto& [key, n] : pred) out.predicted += n;
  return out;
}

Bag node_bag(const Document& doc, MarkableKind kind, bool with_class) {
  Bag bag;
  for (const Node& n : annotated_nodes(doc)) {
    if (!of_kind(n, kind)) continue;
    std::string key = span_key(*span_of(n));
    if (with_class) key += "|" + class_of(n);
    ++bag[key];
  }
  return bag;
}

Bag edge_bag(const Document& doc, MarkableKind kind, bool labeled) {
  Bag bag;
  for (const Edge& e : doc.tree.edges()) {
    const Node& child = doc.tree.node(e.child);
    if (!of_kind(child, kind)) continue;
    std::string key = span_key(*span_of(child)) + "|" + parent_key(doc.tree.node(e.parent));
    if (labeled) key += std::string("|") + to_string(e.label);
    ++bag[key];
  }
  return bag;
}

std::string format_f1(const PRF& p) {
  if (p.gold == 0 && p.predicted == 0) return "-";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.3f", p.f1());
  return buf;
}

}  // namespace

double PRF::precision() const noexcept {
  return predicted == 0 ? 0.0 : static_cast<double>(true_positive) / static_cast<double>(predicted);
}

double PRF::recall() const noexcept {
  return gold == 0 ? 0.0 : static_cast<double>(true_positive) / static_cast<double>(gold);
}

double PRF::f1() const noexcept {
  const double p = precision();
  const double r = recall();
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

PRF& PRF::operator+=(const PRF& other) noexcept {
  true_positive += other.true_positive;
  predicted += other.predicted;
  gold += other.gold;
  return *this;
}

PRF score_recognition(const Document& gold, const Document& pred, MarkableKind kind) {
  check_same(gold, pred);
  return match(node_bag(gold, kind, false), node_bag(pred, kind, false));
}

PRF score_classification(const Document& gold, const Document& pred, MarkableKind kind) {
  check_same(gold, pred);
  return match(node_bag(gold, kind, true), node_bag(pred, kind, true));
}

PRF score_attachment(const Document& gold, const Document& pred, MarkableKind kind,
                     bool labeled) {
  check_same(gold, pred);
  return match(edge_bag(gold, kind, labeled), edge_bag(pred, kind, labeled));
}

const char* to_string(Metric m) noexcept {
  switch (m) {
    case Metric::TimexRecognition: return "Timex Recognition";
    case Metric::TimexClassification: return "Timex Classification";
    case Metric::TimexParsing: return "Timex Parsing";
    case Metric::EventRecognition: return "Event Recognition";
    case Metric::EventClassification: return "Event Classification";
    case Metric::EventRelationsUnlabeled: return "Event Relations (unlabeled)";
    case Metric::EventRelationsLabeled: return "Event Relations (labeled)";
  }
  return "?";
}

PRF score(const Document& gold, const Document& pred, Metric metric) {
  switch (metric) {
    case Metric::TimexRecognition: return score_recognition(gold, pred, MarkableKind::Timex);
    case Metric::TimexClassification: return score_classification(gold, pred, MarkableKind::Timex);
    case Metric::TimexParsing: return score_attachment(gold, pred, MarkableKind::Timex, false);
    case Metric::EventRecognition: return score_recognition(gold, pred, MarkableKind::Event);
    case Metric::EventClassification: return score_classification(gold, pred, MarkableKind::Event);
    case Metric::EventRelationsUnlabeled:
      return score_attachment(gold, pred, MarkableKind::Event, false);
    case Metric::EventRelationsLabeled:
      return score_attachment(gold, pred, MarkableKind::Event, true);
  }
  return {};
}

Scores score_all(const Document& gold, const Document& pred) {
  Scores out{};
  for (std::size_t i = 0; i < kMetrics.size(); ++i) out[i] = score(gold, pred, kMetrics[i]);
  return out;
}

void CorpusScores::add(Genre genre, const Scores& scores) {
  Scores& bucket = genre == Genre::News ? news : narrative;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    bucket[i] += scores[i];
    overall[i] += scores[i];
  }
  ++documents;
}

std::string format_scores(const CorpusScores& scores) {
  char line[128];
  std::string out;
  std::snprintf(line, sizeof line, "%-28s %9s %9s %9s\n", "F1", "news", "narrative", "overall");
  out += line;
  for (std::size_t i = 0; i < kMetrics.size(); ++i) {
    std::snprintf(line, sizeof line, "%-28s %9s %9s %9s\n", to_string(kMetrics[i]),
                  format_f1(scores.news[i]).c_str(), format_f1(scores.narrative[i]).c_str(),
                  format_f1(scores.overall[i]).c_str());
    out += line;
  }
  return out;
}

}  // namespace tdt
