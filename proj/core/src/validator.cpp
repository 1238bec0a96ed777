#include "tdt/validator.hpp"

#include <algorithm>
#include <map>

#include "tdt/errors.hpp"
#include "tdt/format.hpp"

namespace tdt {

const char* to_string(Severity s) noexcept { return s == Severity::Error ? "ERROR" : "WARNING"; }

std::string rule_id(Rule r) { return "R" + std::to_string(static_cast<int>(r)); }

bool has_errors(const std::vector<Diagnostic>& diagnostics) noexcept {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string format_diagnostic(std::string_view file, const Diagnostic& d) {
  std::string out(file);
  out += ':';
  out += d.rule_id();
  out += ':';
  out += to_string(d.severity);
  out += ':';
  out += d.node_id;
  out += ':';
  out += d.message;
  return out;
}

namespace {

class Checker {
 public:
  Checker(const Document& doc, ValidationMode mode) : doc_(doc), mode_(mode) {}

  std::vector<Diagnostic> run() {
    check_parents();
    for (const Edge& e : doc_.tree.edges()) check_edge(e);
    check_classes();
    check_spans();
    std::sort(out_.begin(), out_.end(), [](const Diagnostic& a, const Diagnostic& b) {
      if (a.node_id != b.node_id) return NodeId(a.node_id) < NodeId(b.node_id);
      if (a.rule != b.rule) return a.rule < b.rule;
      return a.message < b.message;
    });
    return std::move(out_);
  }

 private:
  void report(Rule r, const NodeId& node, std::string message,
              Severity severity = Severity::Error) {
    out_.push_back(Diagnostic{r, severity, node.str(), std::move(message)});
  }

  static bool parent_is(const Node& p, MetaNodeKind k) { return is_meta(p, k); }

  static std::string describe(const Node& n) {
    if (const auto* t = std::get_if<TimexNode>(&n)) {
      return std::string(to_string(t->cls)) + " timex '" + t->id.str() + "'";
    }
    if (const auto* e = std::get_if<EventNode>(&n)) {
      return std::string(to_string(e->cls)) + " event '" + e->id.str() + "'";
    }
    return "meta node " + id_of(n).str();
  }

  void check_parents() {
    std::map<NodeId, int> parents;
    for (const Edge& e : doc_.tree.edges()) ++parents[e.child];
    for (const Node& n : doc_.tree.nodes()) {
      const NodeId id = id_of(n);
      const int count = parents.contains(id) ? parents[id] : 0;
      const bool root = is_meta(n, MetaNodeKind::Root);
      if ((root && count != 0) || (!root && count != 1)) {
        report(Rule::SingleParent, id,
               "node has " + std::to_string(count) + " parents, expected " + (root ? "0" : "1"));
      }
    }
  }

  void check_edge(const Edge& e) {
    const Node& child = doc_.tree.node(e.child);
    const Node& parent = doc_.tree.node(e.parent);
    const std::string rel = std::string(" (parent ") + e.parent.str() + ", label " +
                            to_string(e.label) + ")";

    if (std::holds_alternative<MetaNode>(child)) {
      if (parent_is(parent, MetaNodeKind::Dct)) {
        report(Rule::DctParentUse, e.child,
               "DCT may parent only relative concrete timexes and events" + rel);
      } else if (!parent_is(parent, MetaNodeKind::Root) || e.label != EdgeLabel::DependOn) {
        report(Rule::MetaUnderRoot, e.child, "meta nodes attach to ROOT with DEPEND_ON" + rel);
      }
      return;
    }

    if (const auto* t = std::get_if<TimexNode>(&child)) {
      if (t->cls == TimexClass::Unlocatable) {
        report(Rule::UnlocatableInTree, e.child, "unlocatable timexes cannot be tree nodes" + rel);
      }
      if (std::holds_alternative<EventNode>(parent)) {
        report(Rule::TimexParent, e.child, "a timex cannot depend on an event" + rel);
        return;
      }
      const bool parent_is_timex = std::holds_alternative<TimexNode>(parent);
      if (e.label != EdgeLabel::DependOn) {
        if (parent_is_timex) {
          report(Rule::TimexTimexLabel, e.child,
                 "relations between timexes are computed, not annotated; use DEPEND_ON" + rel);
        } else {
          report(Rule::TimexParent, e.child, "timex edges carry DEPEND_ON" + rel);
        }
      }
      switch (t->cls) {
        case TimexClass::AbsoluteConcrete:
          if (parent_is(parent, MetaNodeKind::Dct)) {
            report(Rule::DctParentUse, e.child,
                   "DCT may parent only relative concrete timexes and events" + rel);
          } else if (!parent_is(parent, MetaNodeKind::Root)) {
            report(Rule::AbsoluteUnderRoot, e.child, "absolute concrete timexes attach to ROOT" + rel);
          }
          break;
        case TimexClass::RelativeConcrete: {
          const auto* pt = std::get_if<TimexNode>(&parent);
          const bool concrete = pt != nullptr && (pt->cls == TimexClass::AbsoluteConcrete ||
                                                  pt->cls == TimexClass::RelativeConcrete);
          if (!parent_is(parent, MetaNodeKind::Dct) && !concrete) {
            report(Rule::RelativeParent, e.child,
                   "relative concrete timexes attach to DCT or a concrete timex" + rel);
          }
          break;
        }
        case TimexClass::Vague:
          if (!parent_is(parent, MetaNodeKind::PresentRef) &&
              !parent_is(parent, MetaNodeKind::PastRef) &&
              !parent_is(parent, MetaNodeKind::FutureRef)) {
            report(Rule::VagueParent, e.child,
                   "vague timexes attach to PRESENT_REF, PAST_REF or FUTURE_REF" + rel);
          }
          break;
        case TimexClass::Unlocatable: break;
      }
      return;
    }

    const auto& ev = std::get<EventNode>(child);
    if (parent_is(parent, MetaNodeKind::Root)) {
      report(Rule::EventNotUnderRoot, e.child, "events cannot attach to ROOT" + rel);
    }
    const bool atemporal = parent_is(parent, MetaNodeKind::Atemporal);
    if (e.label == EdgeLabel::DependOn && !atemporal) {
      report(Rule::EventLabel, e.child,
             "event edges carry a temporal relation; DEPEND_ON only under ATEMPORAL" + rel);
    } else if (e.label != EdgeLabel::DependOn && atemporal) {
      report(Rule::EventLabel, e.child, "edges to ATEMPORAL carry DEPEND_ON" + rel);
    }
    if (const auto* pe = std::get_if<EventNode>(&parent)) {
      if (is_eventive(ev.cls) && !is_eventive(pe->cls)) {
        report(Rule::StativeParentsEventive, e.child,
               "eventive event depends on stative " + describe(parent) + rel,
               mode_ == ValidationMode::Strict ? Severity::Error : Severity::Warning);
      }
    }
  }

  void check_classes() {
    auto check = [&](const Node& n) {
      if (const auto* t = std::get_if<TimexNode>(&n)) {
        if (static_cast<std::size_t>(t->cls) >= kTimexClasses.size()) {
          report(Rule::UnknownClass, t->id, "timex class outside the four timex classes");
        }
      } else if (const auto* e = std::get_if<EventNode>(&n)) {
        if (static_cast<std::size_t>(e->cls) >= kEventClasses.size()) {
          report(Rule::UnknownClass, e->id, "event class outside the eight event classes");
        }
      }
    };
    for (const Node& n : doc_.tree.nodes()) check(n);
    for (const TimexNode& t : doc_.unattached) check(Node{t});
  }

  void check_spans() {
    std::vector<std::pair<Span, NodeId>> spans;
    for (const Node& n : annotated_nodes(doc_)) spans.emplace_back(*span_of(n), id_of(n));
    std::sort(spans.begin(), spans.end(), [](const auto& a, const auto& b) {
      if (a.first.start != b.first.start) return a.first.start < b.first.start;
      return a.second < b.second;
    });
    for (std::size_t i = 0; i < spans.size(); ++i) {
      for (std::size_t j = i + 1; j < spans.size() && spans[j].first.start < spans[i].first.end; ++j) {
        const auto& [a, b] = std::minmax(spans[i].second, spans[j].second);
        report(Rule::SpanOverlap, b, "span overlaps the span of '" + a.str() + "'");
      }
    }
  }

  const Document& doc_;
  ValidationMode mode_;
  std::vector<Diagnostic> out_;
};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::vector<Diagnostic> validate(const Document& doc, ValidationMode mode) {
  return Checker(doc, mode).run();
}

std::vector<Diagnostic> validate_source(std::string_view bytes, ValidationMode mode) {
  try {
    return validate(parse_document(bytes), mode);
  } catch (const InvariantViolation& e) {
    switch (e.tree_kind()) {
      case TreeError::Kind::MultipleParents:
      case TreeError::Kind::MissingParent:
      case TreeError::Kind::RootHasParent:
      case TreeError::Kind::CycleDetected:
        return {Diagnostic{Rule::SingleParent, Severity::Error, e.node_id(), e.what()}};
      default: throw;
    }
  } catch (const ParseError& e) {
    if (e.kind() == ParseError::Kind::Schema && ends_with(e.field(), ".class")) {
      return {Diagnostic{Rule::UnknownClass, Severity::Error, e.node_id(), e.what()}};
    }
    throw;
  }
}

}  // namespace tdt
