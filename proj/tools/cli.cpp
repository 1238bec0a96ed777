#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tdt/baseline.hpp"
#include "tdt/errors.hpp"
#include "tdt/format.hpp"
#include "tdt/inference.hpp"
#include "tdt/lexicon.hpp"
#include "tdt/metrics.hpp"
#include "tdt/normalizer.hpp"
#include "tdt/selftest.hpp"
#include "tdt/stats.hpp"
#include "tdt/validator.hpp"

namespace tdt::cli {

namespace {

struct Args {
  // validate
  bool strict = false;
  bool lenient = false;
  std::string format = "text";
  std::vector<std::string> files;
  // normalize
  bool strict_weekdays = false;
  // infer
  std::string file;
  std::vector<std::string> pairs;
  bool all_pairs = false;
  std::string kinds = "timex,event";
  // score
  std::string gold;
  std::string pred;
  std::string iaa;
  // stats
  std::string manifest;
  std::string json_out;
  // parse-baseline, convert
  std::string genre = "auto";
  std::size_t window = 2;
  std::string input;
  std::string output;
  // selftest
  std::size_t samples = 100000;
  std::uint64_t seed = 20111;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int cmd_validate(const Args& a, std::ostream& out, std::ostream& err) {
  const ValidationMode mode = a.strict ? ValidationMode::Strict : ValidationMode::Lenient;
  int status = kOk;
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (const std::string& file : a.files) {
    std::vector<Diagnostic> diagnostics;
    try {
      diagnostics = validate_source(read_file(file), mode);
    } catch (const Error& e) {
      err << file << ": " << e.what() << "\n";
      status = kUsage;
      continue;
    }
    if (has_errors(diagnostics) && status == kOk) status = kDiagnostics;
    for (const Diagnostic& d : diagnostics) {
      if (a.format == "json") {
        report.push_back({{"file", file},
                          {"rule", d.rule_id()},
                          {"severity", to_string(d.severity)},
                          {"node", d.node_id},
                          {"message", d.message}});
      } else {
        err << format_diagnostic(file, d) << "\n";
      }
    }
  }
  if (a.format == "json") out << report.dump(2) << "\n";
  return status;
}

int cmd_normalize(const Args& a, std::ostream& out) {
  ResolveOptions options;
  options.lexicon = demo_lexicon_from_env();
  options.strict_weekdays = a.strict_weekdays;
  for (const std::string& file : a.files) {
    const Document doc = load_document(file);
    const ResolvedMap resolved = resolve_all(doc, options);
    if (a.files.size() > 1) out << "== " << file << "\n";
    for (const Node& n : doc.tree.nodes()) {
      const auto* t = std::get_if<TimexNode>(&n);
      if (t == nullptr) continue;
      out << t->id.str() << "\t" << t->surface << "\t" << render(resolved.at(t->id)) << "\n";
    }
  }
  return kOk;
}

std::pair<NodeId, NodeId> split_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == s.size() ||
      s.find(',', comma + 1) != std::string::npos) {
    throw UsageError("--pairs expects a,b; got '" + s + "'");
  }
  return {NodeId(s.substr(0, comma)), NodeId(s.substr(comma + 1))};
}

int cmd_infer(const Args& a, std::ostream& out) {
  if (a.all_pairs == !a.pairs.empty()) throw UsageError("infer needs exactly one of --pairs and --all-pairs");
  const Document doc = load_document(a.file);
  ResolveOptions options;
  options.lexicon = demo_lexicon_from_env();
  const ResolvedMap resolved = resolve_all(doc, options);

  std::vector<std::pair<NodeId, NodeId>> queries;
  if (a.all_pairs) {
    std::set<NodeKind> kinds;
    std::stringstream ss(a.kinds);
    for (std::string k; std::getline(ss, k, ',');) {
      if (k == "meta") kinds.insert(NodeKind::Meta);
      else if (k == "timex") kinds.insert(NodeKind::Timex);
      else if (k == "event") kinds.insert(NodeKind::Event);
      else throw UsageError("unknown node kind '" + k + "' in --kinds");
    }
    std::vector<NodeId> ids;
    for (const Node& n : doc.tree.nodes()) {
      if (kinds.contains(kind_of(n))) ids.push_back(id_of(n));
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) queries.emplace_back(ids[i], ids[j]);
    }
  } else {
    for (const std::string& p : a.pairs) queries.push_back(split_pair(p));
  }
  std::ostringstream buf;
  for (const auto& [x, y] : queries) {
    buf << x.str() << "\t" << y.str() << "\t" << infer_relation(doc, x, y, resolved).to_string()
        << "\n";
  }
  out << buf.str();
  return kOk;
}

int cmd_score(const Args& a, std::ostream& out, std::ostream& err) {
  const bool by_manifests = !a.gold.empty() || !a.pred.empty();
  if (by_manifests == !a.iaa.empty() || (by_manifests && (a.gold.empty() || a.pred.empty()))) {
    throw UsageError("score needs --gold and --pred, or --iaa");
  }
  CorpusScores scores;
  if (!a.iaa.empty()) {
    const Corpus corpus = load_corpus(a.iaa);
    for (const AnnotationPair& p : corpus.pairs) {
      const Document& first = corpus.documents[p.first].doc;
      scores.add(first.genre, score_all(first, corpus.documents[p.second].doc));
    }
    out << "inter-annotator agreement over " << corpus.pairs.size() << " document pairs\n";
  } else {
    const Corpus gold = load_corpus(a.gold);
    const Corpus pred = load_corpus(a.pred);
    std::map<std::string, const Document*> predicted;
    for (std::size_t i : pred.distinct()) predicted[pred.documents[i].doc.id] = &pred.documents[i].doc;
    for (std::size_t i : gold.distinct()) {
      const Document& g = gold.documents[i].doc;
      if (const auto it = predicted.find(g.id); it != predicted.end()) {
        scores.add(g.genre, score_all(g, *it->second));
      } else {
        err << "warning: no prediction for document '" << g.id << "'\n";
        scores.add(g.genre, score_all(g, markables_of(g).header));
      }
    }
    out << "scored " << scores.documents << " documents\n";
  }
  out << format_scores(scores);
  return kOk;
}

int cmd_stats(const Args& a, std::ostream& out, std::ostream& err) {
  const CorpusReport report = corpus_report(load_corpus(a.manifest));
  for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
  out << format_report(report);
  if (!a.json_out.empty()) write_file(a.json_out, report_to_json(report));
  return kOk;
}

int cmd_parse_baseline(const Args& a) {
  ParserConfig config;
  const auto mode = genre_mode_from_string(a.genre);
  if (!mode) throw UsageError("--genre must be auto, news or narrative");
  if (a.window < 1) throw UsageError("--window must be at least 1");
  config.genre_mode = *mode;
  config.window = a.window;
  config.lexicon = demo_lexicon_from_env();
  Markables input;
  try {
    input = parse_markables(read_file(a.input));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), a.input + ": " + e.what(), e.field(), e.line(), e.column(), e.node_id());
  }
  write_file(a.output, serialize_document(predict_tree(input, config)));
  return kOk;
}

int cmd_convert(const Args& a, std::ostream& out) {
  const std::string text = serialize_document(load_document(a.input));
  if (a.output.empty()) {
    out << text;
  } else {
    write_file(a.output, text);
  }
  return kOk;
}

int cmd_selftest(const Args& a, std::ostream& out) {
  SelftestOptions options;
  options.samples = a.samples;
  options.seed = a.seed;
  const SelftestReport report = run_selftest(options);
  out << format_report(report);
  return report.ok() ? kOk : kDiagnostics;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temporal dependency tree toolkit", "tdt"};
  app.require_subcommand(1);
  Args a;

  auto* validate = app.add_subcommand("validate", "Check annotation rules");
  auto* strict = validate->add_flag("--strict", a.strict, "Stative-parent warnings become errors");
  validate->add_flag("--lenient", a.lenient, "Default mode")->excludes(strict);
  validate->add_option("--format", a.format, "text (stderr) or json (stdout)")
      ->check(CLI::IsMember({"text", "json"}));
  validate->add_option("files", a.files, "Document files")->required();

  auto* normalize = app.add_subcommand("normalize", "Resolve time expressions");
  normalize->add_flag("--strict-weekdays", a.strict_weekdays,
                      "Ambiguous weekdays stay unresolved");
  normalize->add_option("files", a.files, "Document files")->required();

  auto* infer = app.add_subcommand("infer", "Relations between node pairs");
  infer->add_option("--pairs", a.pairs, "a,b (repeatable)")->allow_extra_args(false);
  infer->add_flag("--all-pairs", a.all_pairs, "Every pair of nodes of the selected kinds");
  infer->add_option("--kinds", a.kinds, "Comma-separated subset of meta,timex,event");
  infer->add_option("file", a.file, "Document file")->required();

  auto* score = app.add_subcommand("score", "Agreement scores");
  score->add_option("--gold", a.gold, "Gold manifest");
  score->add_option("--pred", a.pred, "Predicted manifest");
  score->add_option("--iaa", a.iaa, "Manifest with double annotations");

  auto* stats = app.add_subcommand("stats", "Corpus statistics");
  stats->add_option("manifest", a.manifest, "Corpus manifest")->required();
  stats->add_option("--json", a.json_out, "Also write counts as JSON");

  auto* baseline = app.add_subcommand("parse-baseline", "Predict a tree with heuristics");
  baseline->add_option("--genre", a.genre, "auto, news or narrative");
  baseline->add_option("--window", a.window, "Sentence window for candidate parents");
  baseline->add_option("input", a.input, "Node-only document")->required();
  baseline->add_option("output", a.output, "Where to write the predicted document")->required();

  auto* convert = app.add_subcommand("convert", "Rewrite a document in canonical form");
  convert->add_option("input", a.input, "Document file")->required();
  convert->add_option("output", a.output, "Output file (default: stdout)");

  auto* selftest = app.add_subcommand("selftest", "Check the composition tables");
  selftest->add_option("--samples", a.samples, "Random interval triples");
  selftest->add_option("--seed", a.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(a, out, err);
    if (normalize->parsed()) return cmd_normalize(a, out);
    if (infer->parsed()) return cmd_infer(a, out);
    if (score->parsed()) return cmd_score(a, out, err);
    if (stats->parsed()) return cmd_stats(a, out, err);
    if (baseline->parsed()) return cmd_parse_baseline(a);
    if (convert->parsed()) return cmd_convert(a, out);
    if (selftest->parsed()) return cmd_selftest(a, out);
  } catch (const UsageError& e) {
    err << "tdt: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const ValidationFailed& e) {
    err << e.what() << "\n";
    return kDiagnostics;
  } catch (const MissingSemantics& e) {
    err << "tdt: " << e.what() << "\n";
    return kDiagnostics;
  } catch (const DocumentMismatch& e) {
    err << "tdt: " << e.what() << "\n";
    return kDiagnostics;
  } catch (const Error& e) {
    err << "tdt: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "tdt: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace tdt::cli
