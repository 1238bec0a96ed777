#include "tdt/baseline.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tdt/errors.hpp"
#include "tdt/normalizer.hpp"

namespace tdt {

namespace {

struct Candidate {
  NodeId id;
  Span span;
};

bool earlier(const Candidate& a, const Candidate& b) {
  if (a.span.start != b.span.start) return a.span.start < b.span.start;
  return a.id < b.id;
}

std::size_t gap(const Span& a, const Span& b) {
  if (a.end <= b.start) return b.start - a.end;
  if (b.end <= a.start) return a.start - b.end;
  return 0;
}

class Parser {
 public:
  Parser(const Markables& input, const ParserConfig& config) : in_(input), config_(config) {
    genre_ = config.genre_mode == GenreMode::Auto    ? input.header.genre
             : config.genre_mode == GenreMode::News ? Genre::News
                                                    : Genre::Narrative;
  }

  Document run() {
    std::vector<const TimexNode*> timexes;
    for (const TimexNode& t : in_.timexes) timexes.push_back(&t);
    std::sort(timexes.begin(), timexes.end(), [](const TimexNode* a, const TimexNode* b) {
      return earlier({a->id, a->span}, {b->id, b->span});
    });
    for (const TimexNode* t : timexes) attach_timex(*t);

    std::vector<const EventNode*> events;
    for (const EventNode& e : in_.events) events.push_back(&e);
    std::sort(events.begin(), events.end(), [](const EventNode* a, const EventNode* b) {
      return earlier({a->id, a->span}, {b->id, b->span});
    });
    for (const EventNode* e : events) attach_event(*e);

    Document out = in_.header;
    out.tree = build_tree(std::move(nodes_), std::move(edges_), BuildOptions{.insert_meta = true});
    out.unattached = std::move(unattached_);
    std::sort(out.unattached.begin(), out.unattached.end(),
              [](const TimexNode& a, const TimexNode& b) { return a.id < b.id; });
    return out;
  }

 private:
  std::size_t sentence(const Span& s) const { return in_.header.sentence_of(s.start); }

  bool in_window(const Span& parent, const Span& child) const {
    const std::size_t p = sentence(parent);
    const std::size_t c = sentence(child);
    return p <= c && c - p <= config_.window;
  }

  // Nearest candidate starting before `child`.
  static const Candidate* nearest_preceding(const std::vector<Candidate>& pool, const Span& child) {
    const Candidate* best = nullptr;
    for (const Candidate& c : pool) {
      if (c.span.start >= child.start) continue;
      if (best == nullptr || best->span.start < c.span.start ||
          (best->span.start == c.span.start && c.id < best->id)) {
        best = &c;
      }
    }
    return best;
  }

  void add(Node node, const NodeId& parent, EdgeLabel label) {
    edges_.push_back(Edge{id_of(node), parent, label});
    nodes_.push_back(std::move(node));
  }

  void attach_timex(const TimexNode& t) {
    switch (t.cls) {
      case TimexClass::AbsoluteConcrete:
        add(t, meta_id(MetaNodeKind::Root), EdgeLabel::DependOn);
        concrete_.push_back({t.id, t.span});
        break;
      case TimexClass::RelativeConcrete: {
        if (!in_.header.dct && !semantics_for(t, config_.lexicon)) {
          throw MissingSemantics("relative timex '" + t.id.str() +
                                 "' has no semantics and the document has no creation time");
        }
        const Candidate* p = nearest_preceding(concrete_, t.span);
        const NodeId parent =
            p != nullptr && in_window(p->span, t.span) ? p->id : meta_id(MetaNodeKind::Dct);
        add(t, parent, EdgeLabel::DependOn);
        concrete_.push_back({t.id, t.span});
        break;
      }
      case TimexClass::Vague: {
        MetaNodeKind parent = MetaNodeKind::PresentRef;
        const auto semantics = semantics_for(t, config_.lexicon);
        if (const auto* s = semantics ? std::get_if<SymbolicTime>(&*semantics) : nullptr) {
          parent = s->region == TimeRegion::Past     ? MetaNodeKind::PastRef
                   : s->region == TimeRegion::Future ? MetaNodeKind::FutureRef
                                                     : MetaNodeKind::PresentRef;
        } else if (genre_ == Genre::Narrative && sentence(t.span) == 0) {
          parent = MetaNodeKind::PastRef;
        }
        add(t, meta_id(parent), EdgeLabel::DependOn);
        break;
      }
      case TimexClass::Unlocatable: unattached_.push_back(t); return;
    }
    located_.push_back({t.id, t.span});
  }

  void attach_event(const EventNode& e) {
    if (!is_eventive(e.cls)) {
      const Candidate* p = nearest_preceding(eventive_, e.span);
      if (p != nullptr && in_window(p->span, e.span)) {
        add(e, p->id, EdgeLabel::Overlap);
        return;
      }
    }
    if (const Candidate* t = timex_in_sentence(e.span)) {
      add(e, t->id, EdgeLabel::Includes);
    } else if (const Candidate* p = nearest_preceding(eventive_, e.span);
               p != nullptr && in_window(p->span, e.span) && is_eventive(e.cls)) {
      add(e, p->id, EdgeLabel::Before);
    } else {
      add(e, meta_id(genre_ == Genre::News ? MetaNodeKind::Dct : MetaNodeKind::PastRef),
          EdgeLabel::Overlap);
    }
    if (is_eventive(e.cls)) eventive_.push_back({e.id, e.span});
  }

  // Nearest located timex in the same sentence, on either side.
  const Candidate* timex_in_sentence(const Span& s) const {
    const Candidate* best = nullptr;
    std::size_t best_gap = 0;
    for (const Candidate& c : located_) {
      if (sentence(c.span) != sentence(s)) continue;
      const std::size_t g = gap(c.span, s);
      if (best == nullptr || g < best_gap || (g == best_gap && earlier(c, *best))) {
        best = &c;
        best_gap = g;
      }
    }
    return best;
  }

  const Markables& in_;
  const ParserConfig& config_;
  Genre genre_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<TimexNode> unattached_;
  std::vector<Candidate> concrete_;  // absolute and relative timexes
  std::vector<Candidate> located_;   // every timex in the tree
  std::vector<Candidate> eventive_;
};

}  // namespace

const char* to_string(GenreMode m) noexcept {
  switch (m) {
    case GenreMode::Auto: return "auto";
    case GenreMode::News: return "news";
    case GenreMode::Narrative: return "narrative";
  }
  return "auto";
}

std::optional<GenreMode> genre_mode_from_string(std::string_view s) noexcept {
  for (GenreMode m : {GenreMode::Auto, GenreMode::News, GenreMode::Narrative}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

Document predict_tree(const Markables& input, const ParserConfig& config) {
  if (config.window < 1) throw std::invalid_argument("window must be at least 1");
  return Parser(input, config).run();
}

Document predict_tree(const Document& doc, const ParserConfig& config) {
  return predict_tree(markables_of(doc), config);
}

}  // namespace tdt
