// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "tdt/baseline.hpp"
#include "tdt/errors.hpp"
#include "tdt/format.hpp"
#include "tdt/lexicon.hpp"
#include "tdt/metrics.hpp"
#include "tdt/normalizer.hpp"
#include "tdt/selftest.hpp"
#include "tdt/stats.hpp"
#include "tdt/validator.hpp"
#include "testing.hpp"

namespace {

using namespace tdt;
using Clock = std::chrono::steady_clock;

constexpr double kNormalizeSeconds = 1.0;
constexpr double kCompositionSeconds = 30.0;
constexpr std::size_t kMonteCarloSamples = 100000;
constexpr double kScoreTolerance = 1e-9;
constexpr int kPercentSlack = 1;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string render_of(const ResolvedMap& m, const char* id) {
  const auto it = m.find(NodeId(id));
  return it == m.end() ? "<missing>" : render(it->second);
}

Outcome normalization() {
  Outcome o;
  const auto start = Clock::now();
  ResolveOptions options;
  options.lexicon = &Lexicon::demo();
  const Document ex10 = testing::load_fixture("worked/2003_march_next_year.json");
  const ResolvedMap a = resolve_all(ex10, options);
  for (const auto& [id, want] : {std::pair{"t1", "2003"}, {"t2", "2003-03"}, {"t3", "2004"}}) {
    const std::string got = render_of(a, id);
    o.require(got == want, std::string(id) + " rendered " + got);
  }
  const Document ex1 = testing::load_fixture("worked/thursday_8am.json");
  const ResolvedMap b = resolve_all(ex1, options);
  o.require(render_of(b, "t1") == "2003-04-05", "Thursday rendered " + render_of(b, "t1"));
  o.require(render_of(b, "t2") == "2003-04-05T08:00:00", "8:00am rendered " + render_of(b, "t2"));
  const double s = seconds_since(start);
  o.require(s < kNormalizeSeconds, "took " + std::to_string(s) + " s");
  return o;
}

Outcome inference() {
  Outcome o;
  const std::string file = testing::fixture_path("worked/2003_march_next_year.json").string();
  const char* argv[] = {"tdt", "infer", "--all-pairs", "--kinds", "timex", file.c_str()};
  std::ostringstream out, err;
  const int status = cli::run(6, argv, out, err);
  o.require(status == 0, "exit status " + std::to_string(status) + ": " + err.str());
  const std::string want = "t1\tt2\tIncludes\nt1\tt3\tBefore\nt2\tt3\tBefore\n";
  o.require(out.str() == want, "output was '" + out.str() + "'");
  return o;
}

Outcome composition() {
  Outcome o;
  const auto start = Clock::now();
  SelftestOptions options;
  options.samples = kMonteCarloSamples;
  const SelftestReport r = run_selftest(options);
  o.require(r.allen_mismatches.empty(), std::to_string(r.allen_mismatches.size()) + " Allen cells differ");
  o.require(r.coarse_mismatches.empty(), std::to_string(r.coarse_mismatches.size()) + " coarse cells differ");
  o.require(r.samples == kMonteCarloSamples, "ran " + std::to_string(r.samples) + " samples");
  o.require(r.sample_violations == 0, std::to_string(r.sample_violations) + " sampled violations");
  o.require(r.exhaustive_violations == 0, std::to_string(r.exhaustive_violations) + " exhaustive violations");
  const double s = seconds_since(start);
  o.require(s < kCompositionSeconds, "took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(r.samples) + " samples, " + std::to_string(s).substr(0, 4) + " s";
  return o;
}

Outcome validator() {
  Outcome o;
  const auto mutants = testing::fixtures_in("mutants");
  o.require(mutants.size() == 14, std::to_string(mutants.size()) + " mutants");
  for (const auto& path : mutants) {
    const std::string name = path.filename().string();
    const std::string rule = "R" + std::to_string(std::stoi(name.substr(1, 2)));
    const std::string bytes = read_file(path);
    for (ValidationMode mode : {ValidationMode::Strict, ValidationMode::Lenient}) {
      const Severity want =
          rule == "R10" && mode == ValidationMode::Lenient ? Severity::Warning : Severity::Error;
      const auto diags = validate_source(bytes, mode);
      o.require(!diags.empty(), name + " passed");
      for (const Diagnostic& d : diags) {
        o.require(d.rule_id() == rule && d.severity == want, format_diagnostic(name, d));
      }
    }
  }
  const auto clean = testing::fixtures_in("worked");
  o.require(clean.size() == 13, std::to_string(clean.size()) + " clean fixtures");
  for (const auto& path : clean) {
    for (const Diagnostic& d : validate_source(read_file(path), ValidationMode::Strict)) {
      o.require(d.severity != Severity::Error, format_diagnostic(path.filename().string(), d));
    }
  }
  return o;
}

// Words of two letters at [3i, 3i+2); events listed by word index.
Document word_doc(std::size_t words, const std::vector<std::pair<int, EdgeLabel>>& events) {
  Document d;
  d.id = "flip";
  for (std::size_t i = 0; i < words; ++i) d.text += i == 0 ? "ab" : " ab";
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  for (const auto& [w, label] : events) {
    const NodeId id("e" + std::to_string(w));
    nodes.emplace_back(EventNode{id, Span{3u * w, 3u * w + 2}, "ab", EventClass::Event});
    edges.push_back(Edge{id, meta_id(MetaNodeKind::Dct), label});
  }
  d.tree = build_tree(std::move(nodes), std::move(edges), BuildOptions{.insert_meta = true});
  return d;
}

Outcome metrics() {
  Outcome o;
  std::mt19937_64 rng(505);
  for (int i = 0; i < 50; ++i) {
    const Document d = testing::random_document(rng, {}, "m" + std::to_string(i));
    const Scores s = score_all(d, d);
    for (std::size_t m = 0; m < kMetrics.size(); ++m) {
      // Metrics with nothing to score count as agreement.
      const bool perfect = s[m].gold == 0 ? s[m].predicted == 0 : s[m].f1() == 1.0;
      o.require(perfect, d.id + " " + to_string(kMetrics[m]));
    }
  }

  const auto B = EdgeLabel::Before;
  const Document gold = word_doc(8, {{0, B}, {1, B}, {2, B}, {3, B}});
  const Document pred = word_doc(8, {{0, B}, {1, B}, {2, B}, {5, B}, {6, B}});
  const PRF r = score_recognition(gold, pred, MarkableKind::Event);
  o.require(std::abs(r.precision() - 0.6) < kScoreTolerance, "P=" + std::to_string(r.precision()));
  o.require(std::abs(r.recall() - 0.75) < kScoreTolerance, "R=" + std::to_string(r.recall()));

  std::vector<std::pair<int, EdgeLabel>> g, p;
  for (int i = 0; i < 10; ++i) {
    g.emplace_back(i, B);
    p.emplace_back(i, i == 7 ? EdgeLabel::After : B);
  }
  const Document fg = word_doc(10, g);
  const Document fp = word_doc(10, p);
  const double labeled = score_attachment(fg, fp, MarkableKind::Event, true).f1();
  const double unlabeled = score_attachment(fg, fp, MarkableKind::Event, false).f1();
  o.require(labeled == 0.9, "labeled " + std::to_string(labeled));
  o.require(unlabeled == 1.0, "unlabeled " + std::to_string(unlabeled));
  return o;
}

// Counts gathered by walking each tree from ROOT.
struct Tally {
  std::size_t documents = 0, sentences = 0, timexes = 0, events = 0, unlocatable = 0;
  std::map<std::string, std::size_t> classes, labels, parents;
};

std::string type_of(const Node& n) {
  if (std::holds_alternative<MetaNode>(n)) return "meta";
  if (std::holds_alternative<TimexNode>(n)) return "timex";
  return std::get<EventNode>(n).cls == EventClass::Event ? "eventive" : "stative";
}

void walk(const Document& d, Tally& t) {
  ++t.documents;
  t.sentences += d.sentence_breaks ? d.sentence_breaks->size() : 0;
  t.unlocatable += d.unattached.size();
  std::function<void(const NodeId&)> visit = [&](const NodeId& id) {
    const Node& n = d.tree.node(id);
    const std::string type = type_of(n);
    if (type != "meta") {
      if (type == "timex") {
        ++t.timexes;
        ++t.classes[to_string(std::get<TimexNode>(n).cls)];
      } else {
        ++t.events;
        ++t.classes[to_string(std::get<EventNode>(n).cls)];
      }
      const Edge* e = d.tree.parent_edge(id);
      ++t.labels[to_string(e->label)];
      ++t.parents[type + "<" + type_of(d.tree.node(e->parent))];
    }
    for (const NodeId& c : d.tree.children(id)) visit(c);
  };
  visit(meta_id(MetaNodeKind::Root));
}

Tally tally_of(const GenreStats& s) {
  Tally t;
  t.documents = s.documents;
  t.sentences = s.sentences;
  t.timexes = s.timexes;
  t.events = s.events;
  t.unlocatable = s.unlocatable;
  for (std::size_t i = 0; i < 3; ++i) {
    if (s.timex_classes[i] != 0) t.classes[to_string(kTimexClasses[i])] = s.timex_classes[i];
  }
  for (std::size_t i = 0; i < 8; ++i) {
    if (s.event_classes[i] != 0) t.classes[to_string(kEventClasses[i])] = s.event_classes[i];
  }
  const EdgeLabelCounts& l = s.edge_labels;
  for (const auto& [name, n] : {std::pair{"INCLUDES", l.includes}, {"BEFORE", l.before}, {"AFTER", l.after},
                                {"OVERLAP", l.overlap}, {"DEPEND_ON", l.depend_on}}) {
    if (n != 0) t.labels[name] = n;
  }
  static const char* kChild[] = {"timex", "eventive", "stative"};
  static const char* kParent[] = {"meta", "timex", "eventive", "stative"};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (s.parent_child[r][c] != 0) t.parents[std::string(kChild[r]) + "<" + kParent[c]] = s.parent_child[r][c];
    }
  }
  return t;
}

bool same(const Tally& a, const Tally& b) {
  return a.documents == b.documents && a.sentences == b.sentences && a.timexes == b.timexes &&
         a.events == b.events && a.unlocatable == b.unlocatable && a.classes == b.classes &&
         a.labels == b.labels && a.parents == b.parents;
}

template <std::size_t N>
void check_row(Outcome& o, const std::string& name, const std::array<std::size_t, N>& row) {
  std::size_t total = 0;
  for (std::size_t n : row) total += n;
  if (total == 0) return;
  int sum = 0;
  for (std::size_t n : row) sum += percent(n, total);
  o.require(std::abs(sum - 100) <= kPercentSlack, name + " percentages sum to " + std::to_string(sum));
}

void check_percentages(Outcome& o, const std::string& genre, const GenreStats& s) {
  check_row(o, genre + " timex classes", s.timex_classes);
  check_row(o, genre + " event classes", s.event_classes);
  const EdgeLabelCounts& l = s.edge_labels;
  check_row(o, genre + " edge labels",
            std::array<std::size_t, 4>{l.includes, l.before_after(), l.overlap, l.depend_on});
  for (std::size_t r = 0; r < 3; ++r) check_row(o, genre + " parents row " + std::to_string(r), s.parent_child[r]);
}

Outcome statistics() {
  Outcome o;
  std::mt19937_64 rng(610);
  const Corpus corpus = testing::random_corpus(rng, 10, 3);
  const CorpusReport report = corpus_report(corpus);
  std::map<Genre, Tally> walked;
  for (std::size_t i : corpus.distinct()) walked[corpus.documents[i].doc.genre];
  for (std::size_t i : corpus.distinct()) walk(corpus.documents[i].doc, walked[corpus.documents[i].doc.genre]);
  o.require(same(tally_of(report.news.total()), walked[Genre::News]), "news counts differ from the tree walk");
  o.require(same(tally_of(report.narrative.total()), walked[Genre::Narrative]),
            "narrative counts differ from the tree walk");
  o.require(report.overall().documents == 10, "document count");
  check_percentages(o, "news", report.news.total());
  check_percentages(o, "narrative", report.narrative.total());
  return o;
}

// Only with a converted copy of the released corpus.
std::optional<Outcome> released_corpus() {
  const char* manifest = std::getenv("TDT_RELEASED_CORPUS");
  if (manifest == nullptr || *manifest == '\0') return std::nullopt;
  Outcome o;
  const CorpusReport r = corpus_report(load_corpus(manifest));
  const GenreStats news = r.news.total();
  o.require(news.documents == 115, "news documents " + std::to_string(news.documents));
  o.require(news.sentences == 2841, "news sentences " + std::to_string(news.sentences));
  o.require(news.timexes == 1167, "news timexes " + std::to_string(news.timexes));
  o.require(news.events == 4807, "news events " + std::to_string(news.events));
  const EdgeLabelCounts& l = news.edge_labels;
  o.require(l.includes == 1096 && l.before_after() == 507 && l.overlap == 3246 && l.depend_on == 1125,
            "news edge distribution " + std::to_string(l.includes) + "/" + std::to_string(l.before_after()) +
                "/" + std::to_string(l.overlap) + "/" + std::to_string(l.depend_on));
  const auto notes = discrepancy_notes(r);
  const bool flagged = std::any_of(notes.begin(), notes.end(),
                                   [](const std::string& n) { return n.rfind("narrative", 0) == 0; });
  o.require(flagged, "narrative discrepancy not flagged");
  return o;
}

Outcome baseline() {
  Outcome o;
  std::mt19937_64 rng(707);
  ParserConfig config;
  config.lexicon = &Lexicon::demo();
  std::size_t genres[2] = {0, 0};
  for (int i = 0; i < 200; ++i) {
    Document d = testing::random_document(rng, {}, "p" + std::to_string(i));
    // Relative timexes need a creation time or semantics to be parsed at all.
    if (!d.dct) d.dct = parse_calendar_value("2010-06-15");
    ++genres[d.genre == Genre::News ? 0 : 1];
    const Document p = predict_tree(markables_of(d), config);
    for (const Diagnostic& x : validate(p, ValidationMode::Strict)) {
      o.require(x.severity != Severity::Error, format_diagnostic(d.id, x));
    }
  }
  o.require(genres[0] > 0 && genres[1] > 0, "both genres");

  auto edge = [&](const Document& p, const char* child) { return *p.tree.parent_edge(NodeId(child)); };
  const Document ex1 = predict_tree(markables_of(testing::load_fixture("worked/thursday_8am.json")), config);
  o.require(edge(ex1, "t2").parent == NodeId("t1"), "8:00am not under Thursday");
  o.require(edge(ex1, "e1") == Edge{NodeId("e1"), NodeId("t1"), EdgeLabel::Includes}, "arrived not INCLUDES Thursday");
  o.require(edge(ex1, "e2") == Edge{NodeId("e2"), NodeId("t2"), EdgeLabel::Includes}, "got not INCLUDES 8:00am");
  const Document ex2 =
      predict_tree(markables_of(testing::load_fixture("worked/arrived_walked_began.json")), config);
  o.require(edge(ex2, "e2") == Edge{NodeId("e2"), NodeId("e1"), EdgeLabel::Before}, "walked not after arrived");
  o.require(edge(ex2, "e3") == Edge{NodeId("e3"), NodeId("e2"), EdgeLabel::Before}, "began not after walked");
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::size_t files = 0;
  for (const char* dir : {"worked", "mutants"}) {
    for (const auto& path : testing::fixtures_in(dir)) {
      Document d;
      try {
        d = load_document(path);
      } catch (const ParseError&) {
        continue;  // mutants that cannot be parsed by design
      }
      ++files;
      const std::string text = serialize_document(d);
      o.require(parse_document(text) == d, path.filename().string() + " changed");
      o.require(serialize_document(d) == text, path.filename().string() + " not deterministic");
    }
  }
  std::mt19937_64 rng(808);
  for (int i = 0; i < 96; ++i) {
    const Document d = testing::random_document(rng, {}, "rt" + std::to_string(i));
    const std::string text = serialize_document(d);
    o.require(parse_document(text) == d, d.id + " changed");
    o.require(serialize_document(parse_document(text)) == text, d.id + " not deterministic");
  }
  if (o.pass) o.detail = std::to_string(files) + " fixtures, 96 random documents";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, normalization}, {2, inference}, {3, composition}, {4, validator},
      {5, metrics},       {6, statistics}, {7, baseline},   {8, round_trip}};
  bool ok = true;
  for (const auto& [n, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    ok = ok && o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    if (n == 6) {
      try {
        if (const auto extra = released_corpus()) {
          ok = ok && extra->pass;
          std::cout << "criterion 6 (released corpus): " << (extra->pass ? "PASS" : "FAIL");
          if (!extra->detail.empty()) std::cout << " (" << extra->detail << ")";
          std::cout << "\n";
        } else {
          std::cout << "criterion 6 (released corpus): SKIP (TDT_RELEASED_CORPUS not set)\n";
        }
      } catch (const std::exception& e) {
        ok = false;
        std::cout << "criterion 6 (released corpus): FAIL (exception: " << e.what() << ")\n";
      }
    }
  }
  return ok ? 0 : 1;
}
