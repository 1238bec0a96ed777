#include "tdt/inference.hpp"

#include <bit>
#include <stdexcept>

#include "tdt/errors.hpp"

namespace tdt {

namespace {

constexpr std::array<const char*, 5> kNames = {"Before", "After", "Overlap", "Includes",
                                               "IncludedIn"};

using allen::bit;
using AR = allen::Relation;

CoarseTable derive_table() {
  CoarseTable table{};
  for (CoarseRelation r1 : kCoarseRelations) {
    for (CoarseRelation r2 : kCoarseRelations) {
      allen::RelationMask m = 0;
      for (int i = 0; i < allen::kRelationCount; ++i) {
        if (!(allen_members(r1) & (1u << i))) continue;
        for (int j = 0; j < allen::kRelationCount; ++j) {
          if (!(allen_members(r2) & (1u << j))) continue;
          m |= allen::compose(static_cast<AR>(i), static_cast<AR>(j));
        }
      }
      std::uint8_t bits = 0;
      for (int k = 0; k < allen::kRelationCount; ++k) {
        if (m & (1u << k)) bits |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(coarse_of(static_cast<AR>(k))));
      }
      table[static_cast<std::size_t>(r1)][static_cast<std::size_t>(r2)] = RelationSet::from_bits(bits);
    }
  }
  return table;
}

// Relation of the step's first node to its second.
struct Step {
  NodeId from;
  NodeId to;
  EdgeLabel label;
  bool upward;  // from is the child
};

RelationSet step_relation(const Step& s, const Document& doc, const ResolvedMap& resolved) {
  if (s.label != EdgeLabel::DependOn) {
    const CoarseRelation r = *relation_of(s.label);
    return RelationSet(s.upward ? invert(r) : r);
  }
  const auto a = resolved.find(s.from);
  const auto b = resolved.find(s.to);
  if (a != resolved.end() && b != resolved.end() && std::holds_alternative<Interval>(a->second) &&
      std::holds_alternative<Interval>(b->second)) {
    return RelationSet(compare_intervals(a->second, b->second));
  }
  (void)doc;
  return RelationSet::full();
}

RelationSet infer_oriented(const Document& doc, const NodeId& a, const NodeId& b,
                           const ResolvedMap& resolved, const InferOptions& options) {
  const TemporalDependencyTree& tree = doc.tree;
  const NodeId lca = lowest_common_ancestor(tree, a, b);

  std::vector<Step> steps;
  for (NodeId cur = a; cur != lca;) {
    const Edge* e = tree.parent_edge(cur);
    steps.push_back(Step{cur, e->parent, e->label, true});
    cur = e->parent;
  }
  std::vector<Step> down;
  for (NodeId cur = b; cur != lca;) {
    const Edge* e = tree.parent_edge(cur);
    down.push_back(Step{e->parent, cur, e->label, false});
    cur = e->parent;
  }
  steps.insert(steps.end(), down.rbegin(), down.rend());

  const bool bounded = steps.size() > options.path_bound;
  RelationSet acc(CoarseRelation::Overlap);
  bool first = true;
  for (const Step& s : steps) {
    const RelationSet r = step_relation(s, doc, resolved);
    acc = first ? r : compose(acc, r);
    first = false;
    if (bounded && acc.is_full()) break;
  }
  return acc;
}

}  // namespace

const char* to_string(CoarseRelation r) noexcept { return kNames[static_cast<std::size_t>(r)]; }

std::optional<CoarseRelation> coarse_from_string(std::string_view s) noexcept {
  for (CoarseRelation r : kCoarseRelations) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

CoarseRelation invert(CoarseRelation r) noexcept {
  switch (r) {
    case CoarseRelation::Before: return CoarseRelation::After;
    case CoarseRelation::After: return CoarseRelation::Before;
    case CoarseRelation::Includes: return CoarseRelation::IncludedIn;
    case CoarseRelation::IncludedIn: return CoarseRelation::Includes;
    case CoarseRelation::Overlap: break;
  }
  return CoarseRelation::Overlap;
}

allen::RelationMask allen_members(CoarseRelation r) noexcept {
  switch (r) {
    case CoarseRelation::Before: return bit(AR::Before) | bit(AR::Meets);
    case CoarseRelation::After: return bit(AR::After) | bit(AR::MetBy);
    case CoarseRelation::Includes: return bit(AR::Contains);
    case CoarseRelation::IncludedIn: return bit(AR::During);
    case CoarseRelation::Overlap: break;
  }
  return bit(AR::Overlaps) | bit(AR::OverlappedBy) | bit(AR::Starts) | bit(AR::StartedBy) |
         bit(AR::Finishes) | bit(AR::FinishedBy) | bit(AR::Equals);
}

CoarseRelation coarse_of(allen::Relation r) noexcept {
  for (CoarseRelation c : kCoarseRelations) {
    if (allen_members(c) & bit(r)) return c;
  }
  return CoarseRelation::Overlap;
}

RelationSet RelationSet::from_bits(std::uint8_t bits) {
  if ((bits & kFull) == 0 || (bits & ~kFull) != 0) {
    throw std::invalid_argument("relation set must be a non-empty subset of the five relations");
  }
  return RelationSet(Raw{}, bits);
}

int RelationSet::size() const noexcept { return std::popcount(bits_); }

std::string RelationSet::to_string() const {
  std::string out;
  for (CoarseRelation r : kCoarseRelations) {
    if (!contains(r)) continue;
    if (!out.empty()) out += ',';
    out += tdt::to_string(r);
  }
  return out;
}

RelationSet invert(RelationSet s) noexcept {
  std::uint8_t bits = 0;
  for (CoarseRelation r : kCoarseRelations) {
    if (s.contains(r)) bits |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(invert(r)));
  }
  return RelationSet::from_bits(bits);
}

const CoarseTable& coarse_composition_table() {
  static const CoarseTable table = derive_table();
  return table;
}

RelationSet compose(CoarseRelation r1, CoarseRelation r2) {
  return coarse_composition_table()[static_cast<std::size_t>(r1)][static_cast<std::size_t>(r2)];
}

RelationSet compose(RelationSet s1, RelationSet s2) {
  std::optional<RelationSet> out;
  for (CoarseRelation r1 : kCoarseRelations) {
    if (!s1.contains(r1)) continue;
    for (CoarseRelation r2 : kCoarseRelations) {
      if (!s2.contains(r2)) continue;
      if (out) {
        *out |= compose(r1, r2);
      } else {
        out = compose(r1, r2);
      }
    }
  }
  return *out;
}

CoarseRelation compare_intervals(const Interval& a, const Interval& b) noexcept {
  return classify(a.start, a.end, b.start, b.end);
}

CoarseRelation compare_intervals(const ResolvedTime& a, const ResolvedTime& b) {
  const auto* ia = std::get_if<Interval>(&a);
  const auto* ib = std::get_if<Interval>(&b);
  if (ia == nullptr || ib == nullptr) {
    throw NotAnInterval("compare_intervals needs two intervals, got " + render(a) + " and " +
                        render(b));
  }
  return compare_intervals(*ia, *ib);
}

std::optional<CoarseRelation> relation_of(EdgeLabel label) noexcept {
  switch (label) {
    case EdgeLabel::Before: return CoarseRelation::Before;
    case EdgeLabel::After: return CoarseRelation::After;
    case EdgeLabel::Overlap: return CoarseRelation::Overlap;
    case EdgeLabel::Includes: return CoarseRelation::Includes;
    case EdgeLabel::DependOn: break;
  }
  return std::nullopt;
}

RelationSet infer_relation(const Document& doc, const NodeId& a, const NodeId& b,
                           const ResolvedMap& resolved, const InferOptions& options) {
  doc.tree.node(a);
  doc.tree.node(b);
  if (a == b) return RelationSet(CoarseRelation::Overlap);

  const auto ra = resolved.find(a);
  const auto rb = resolved.find(b);
  if (ra != resolved.end() && rb != resolved.end() &&
      std::holds_alternative<Interval>(ra->second) && std::holds_alternative<Interval>(rb->second)) {
    return RelationSet(compare_intervals(ra->second, rb->second));
  }
  // Set-valued composition is not associative, so always fold in one
  // orientation and invert for the other.
  if (b < a) return invert(infer_oriented(doc, b, a, resolved, options));
  return infer_oriented(doc, a, b, resolved, options);
}

}  // namespace tdt
