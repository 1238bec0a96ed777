#include "tdt/stats.hpp"

#include <cstdio>
#include <json.hpp>
#include <string>

#include "tdt/errors.hpp"
#include "tdt/validator.hpp"

namespace tdt {

namespace {

using json = nlohmann::ordered_json;

ChildType child_type(const Node& n) {
  if (std::holds_alternative<TimexNode>(n)) return ChildType::Timex;
  return is_eventive(std::get<EventNode>(n).cls) ? ChildType::EventiveEvent
                                                 : ChildType::StativeEvent;
}

ParentType parent_type(const Node& n) {
  if (std::holds_alternative<MetaNode>(n)) return ParentType::Meta;
  if (std::holds_alternative<TimexNode>(n)) return ParentType::Timex;
  return is_eventive(std::get<EventNode>(n).cls) ? ParentType::EventiveEvent
                                                 : ParentType::StativeEvent;
}

template <std::size_t N>
void add_array(std::array<std::size_t, N>& a, const std::array<std::size_t, N>& b) {
  for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
}

constexpr std::array<const char*, 3> kTimexRows = {"Absolute Concrete", "Relative Concrete",
                                                   "Vague"};
constexpr std::array<const char*, 8> kEventRows = {
    "Event", "State", "Habitual", "Ongoing Event", "Completed", "Modalized",
    "Generic Habitual", "Generic State"};
constexpr std::array<const char*, 3> kChildNames = {"Time Expression", "Eventive Event",
                                                    "Stative Event"};
constexpr std::array<const char*, 4> kParentNames = {"Pre-defined Node", "Time Expression",
                                                     "Eventive Event", "Stative Event"};

std::string cell(std::size_t count, std::size_t total) {
  return std::to_string(count) + " (" + std::to_string(percent(count, total)) + "%)";
}

std::string row(const std::string& label, const std::vector<std::string>& cells, int label_width,
                int cell_width) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-*s", label_width, label.c_str());
  std::string out = buf;
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof buf, " %*s", cell_width, c.c_str());
    out += buf;
  }
  return out + "\n";
}

std::size_t sum(const std::array<std::size_t, 4>& r) { return r[0] + r[1] + r[2] + r[3]; }

json stats_json(const GenreStats& s) {
  json j;
  j["documents"] = s.documents;
  j["sentences"] = s.sentences;
  j["timexes"] = s.timexes;
  j["events"] = s.events;
  j["unlocatable"] = s.unlocatable;
  json timex = json::object();
  for (std::size_t i = 0; i < 3; ++i) timex[to_string(kTimexClasses[i])] = s.timex_classes[i];
  j["timex_classes"] = timex;
  json events = json::object();
  for (std::size_t i = 0; i < 8; ++i) events[to_string(kEventClasses[i])] = s.event_classes[i];
  j["event_classes"] = events;
  j["edge_labels"] = {{"INCLUDES", s.edge_labels.includes},
                      {"BEFORE", s.edge_labels.before},
                      {"AFTER", s.edge_labels.after},
                      {"OVERLAP", s.edge_labels.overlap},
                      {"DEPEND_ON", s.edge_labels.depend_on}};
  json matrix = json::array();
  for (const auto& r : s.parent_child) matrix.push_back(r);
  j["parent_child"] = matrix;
  return j;
}

}  // namespace

GenreStats& GenreStats::operator+=(const GenreStats& o) {
  documents += o.documents;
  sentences += o.sentences;
  timexes += o.timexes;
  events += o.events;
  unlocatable += o.unlocatable;
  add_array(timex_classes, o.timex_classes);
  add_array(event_classes, o.event_classes);
  edge_labels.includes += o.edge_labels.includes;
  edge_labels.before += o.edge_labels.before;
  edge_labels.after += o.edge_labels.after;
  edge_labels.overlap += o.edge_labels.overlap;
  edge_labels.depend_on += o.edge_labels.depend_on;
  for (std::size_t i = 0; i < parent_child.size(); ++i) add_array(parent_child[i], o.parent_child[i]);
  return *this;
}

GenreStats document_stats(const Document& doc) {
  GenreStats s;
  s.documents = 1;
  s.sentences = doc.sentence_breaks ? doc.sentence_breaks->size() : 0;
  s.unlocatable = doc.unattached.size();
  for (const Node& n : doc.tree.nodes()) {
    if (const auto* t = std::get_if<TimexNode>(&n)) {
      if (t->cls == TimexClass::Unlocatable) {
        ++s.unlocatable;
      } else {
        ++s.timexes;
        ++s.timex_classes[static_cast<std::size_t>(t->cls)];
      }
    } else if (const auto* e = std::get_if<EventNode>(&n)) {
      ++s.events;
      ++s.event_classes[static_cast<std::size_t>(e->cls)];
    }
  }
  for (const Edge& e : doc.tree.edges()) {
    const Node& child = doc.tree.node(e.child);
    if (std::holds_alternative<MetaNode>(child)) continue;
    switch (e.label) {
      case EdgeLabel::Includes: ++s.edge_labels.includes; break;
      case EdgeLabel::Before: ++s.edge_labels.before; break;
      case EdgeLabel::After: ++s.edge_labels.after; break;
      case EdgeLabel::Overlap: ++s.edge_labels.overlap; break;
      case EdgeLabel::DependOn: ++s.edge_labels.depend_on; break;
    }
    const auto r = static_cast<std::size_t>(child_type(child));
    const auto c = static_cast<std::size_t>(parent_type(doc.tree.node(e.parent)));
    ++s.parent_child[r][c];
  }
  return s;
}

GenreStats GenreReport::total() const {
  GenreStats t = single;
  t += double_annotated;
  return t;
}

GenreStats CorpusReport::overall() const {
  GenreStats t = news.total();
  t += narrative.total();
  return t;
}

CorpusReport corpus_report(const Corpus& corpus) {
  CorpusReport report;
  for (std::size_t i : corpus.distinct()) {
    const CorpusDocument& cd = corpus.documents[i];
    const auto diagnostics = validate(cd.doc, ValidationMode::Lenient);
    if (has_errors(diagnostics)) {
      std::string message;
      for (const Diagnostic& d : diagnostics) {
        if (d.severity != Severity::Error) continue;
        if (!message.empty()) message += '\n';
        message += format_diagnostic(cd.source.path.string(), d);
      }
      throw ValidationFailed(message);
    }
    if (!cd.doc.sentence_breaks) {
      report.warnings.push_back(cd.source.path.string() +
                                ": no sentence_breaks; counted as 0 sentences");
    }
    GenreReport& g = cd.doc.genre == Genre::News ? report.news : report.narrative;
    (corpus.is_double_annotated(cd.doc.id) ? g.double_annotated : g.single) +=
        document_stats(cd.doc);
  }
  return report;
}

ParentChildMatrix parent_child_matrix(const Corpus& corpus) {
  return corpus_report(corpus).overall().parent_child;
}

int percent(std::size_t count, std::size_t total) noexcept {
  if (total == 0) return 0;
  return static_cast<int>((200 * count + total) / (2 * total));
}

std::vector<std::string> discrepancy_notes(const CorpusReport& report) {
  struct Published {
    const char* genre;
    std::size_t docs, table_timex, table_events, prose_timex, prose_events;
  };
  static constexpr std::array<Published, 2> kPublished = {{
      {"news", 115, 1167, 4807, 1166, 4805},
      {"narrative", 120, 131, 10976, 132, 10314},
  }};
  std::vector<std::string> out;
  const std::array<GenreStats, 2> totals = {report.news.total(), report.narrative.total()};
  for (std::size_t i = 0; i < kPublished.size(); ++i) {
    const Published& p = kPublished[i];
    const GenreStats& s = totals[i];
    if (s.documents != p.docs) continue;
    const std::string table =
        std::to_string(p.table_timex) + " timexes / " + std::to_string(p.table_events) + " events";
    const std::string prose =
        std::to_string(p.prose_timex) + " timexes / " + std::to_string(p.prose_events) + " events";
    std::string note = std::string(p.genre) + ": ";
    if (s.timexes == p.table_timex && s.events == p.table_events) {
      note += "totals match the published table (" + table + "); the published prose says " + prose;
    } else if (s.timexes == p.prose_timex && s.events == p.prose_events) {
      note += "totals match the published prose (" + prose + "); the published table says " + table;
    } else {
      note += "totals " + std::to_string(s.timexes) + " timexes / " + std::to_string(s.events) +
              " events match neither the published table (" + table + ") nor the prose (" +
              prose + ")";
    }
    out.push_back(note);
  }
  return out;
}

std::string format_report(const CorpusReport& report) {
  std::string out;
  const GenreStats news = report.news.total();
  const GenreStats narrative = report.narrative.total();

  out += "Corpus annotation statistics\n";
  out += row("", {"Docs", "Sent", "Timex", "Events"}, 20, 8);
  auto counts = [](const GenreStats& s) {
    return std::vector<std::string>{std::to_string(s.documents), std::to_string(s.sentences),
                                    std::to_string(s.timexes), std::to_string(s.events)};
  };
  for (const auto& [name, g] : {std::pair<const char*, const GenreReport*>{"news", &report.news},
                                {"narrative", &report.narrative}}) {
    out += row(std::string(name) + " Single", counts(g->single), 20, 8);
    out += row(std::string(name) + " Double", counts(g->double_annotated), 20, 8);
    out += row(std::string(name) + " Total", counts(g->total()), 20, 8);
  }

  out += "\nDistribution of time expression types\n";
  out += row("", {"news", "narrative"}, 20, 12);
  for (std::size_t i = 0; i < kTimexRows.size(); ++i) {
    out += row(kTimexRows[i],
               {cell(news.timex_classes[i], news.timexes),
                cell(narrative.timex_classes[i], narrative.timexes)},
               20, 12);
  }
  out += "(unlocatable, not counted above: news " + std::to_string(news.unlocatable) +
         ", narrative " + std::to_string(narrative.unlocatable) + ")\n";

  out += "\nDistribution of event types\n";
  out += row("", {"news", "narrative"}, 20, 12);
  for (std::size_t i = 0; i < kEventRows.size(); ++i) {
    out += row(kEventRows[i],
               {cell(news.event_classes[i], news.events),
                cell(narrative.event_classes[i], narrative.events)},
               20, 12);
  }

  out += "\nDistribution of temporal relations\n";
  out += row("", {"news", "narrative"}, 20, 12);
  const std::size_t nt = news.edge_labels.total();
  const std::size_t rt = narrative.edge_labels.total();
  out += row("Includes", {cell(news.edge_labels.includes, nt), cell(narrative.edge_labels.includes, rt)}, 20, 12);
  out += row("Before(After)",
             {cell(news.edge_labels.before_after(), nt), cell(narrative.edge_labels.before_after(), rt)},
             20, 12);
  out += row("  Before", {std::to_string(news.edge_labels.before), std::to_string(narrative.edge_labels.before)}, 20, 12);
  out += row("  After", {std::to_string(news.edge_labels.after), std::to_string(narrative.edge_labels.after)}, 20, 12);
  out += row("Overlap", {cell(news.edge_labels.overlap, nt), cell(narrative.edge_labels.overlap, rt)}, 20, 12);
  out += row("Depend-on", {cell(news.edge_labels.depend_on, nt), cell(narrative.edge_labels.depend_on, rt)}, 20, 12);

  out += "\nDistribution of parent types for each child type\n";
  out += row("", {kParentNames.begin(), kParentNames.end()}, 26, 17);
  for (const auto& [name, s] : {std::pair<const char*, const GenreStats*>{"news", &news},
                                {"narrative", &narrative}}) {
    for (std::size_t r = 0; r < 3; ++r) {
      const auto& counts_row = s->parent_child[r];
      std::vector<std::string> cells;
      for (std::size_t c = 0; c < 4; ++c) cells.push_back(cell(counts_row[c], sum(counts_row)));
      out += row(std::string(name) + " " + kChildNames[r], cells, 26, 17);
    }
  }

  const auto notes = discrepancy_notes(report);
  if (!notes.empty()) {
    out += "\nNotes\n";
    for (const auto& n : notes) out += n + "\n";
  }
  return out;
}

std::string report_to_json(const CorpusReport& report) {
  json j;
  j["news"] = {{"single", stats_json(report.news.single)},
               {"double", stats_json(report.news.double_annotated)},
               {"total", stats_json(report.news.total())}};
  j["narrative"] = {{"single", stats_json(report.narrative.single)},
                    {"double", stats_json(report.narrative.double_annotated)},
                    {"total", stats_json(report.narrative.total())}};
  j["overall"] = stats_json(report.overall());
  j["notes"] = discrepancy_notes(report);
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

}  // namespace tdt
