#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tdt/allen.hpp"
#include "tdt/model.hpp"
#include "tdt/normalizer.hpp"

namespace tdt {

// The five-relation quotient of Allen's algebra used for inference.
// IncludedIn is the inverse of Includes and never labels an edge.
enum class CoarseRelation : std::uint8_t { Before, After, Overlap, Includes, IncludedIn };

inline constexpr std::array<CoarseRelation, 5> kCoarseRelations = {
    CoarseRelation::Before, CoarseRelation::After, CoarseRelation::Overlap,
    CoarseRelation::Includes, CoarseRelation::IncludedIn};

// "Before", "After", "Overlap", "Includes", "IncludedIn".
const char* to_string(CoarseRelation r) noexcept;
std::optional<CoarseRelation> coarse_from_string(std::string_view s) noexcept;

CoarseRelation invert(CoarseRelation r) noexcept;

// Allen members of each coarse relation: Before = {before, meets},
// Overlap = {overlaps, overlapped-by, starts, started-by, finishes,
// finished-by, equals}, Includes = {contains}, IncludedIn = {during}.
allen::RelationMask allen_members(CoarseRelation r) noexcept;
CoarseRelation coarse_of(allen::Relation r) noexcept;

// A non-empty set of coarse relations. The full set means "unknown".
class RelationSet {
 public:
  // The full set.
  constexpr RelationSet() noexcept : bits_(kFull) {}
  constexpr explicit RelationSet(CoarseRelation r) noexcept : bits_(bit(r)) {}

  static constexpr RelationSet full() noexcept { return RelationSet(); }
  // Throws std::invalid_argument for an empty mask.
  static RelationSet from_bits(std::uint8_t bits);

  constexpr bool contains(CoarseRelation r) const noexcept { return (bits_ & bit(r)) != 0; }
  constexpr bool is_full() const noexcept { return bits_ == kFull; }
  constexpr bool is_singleton() const noexcept { return (bits_ & (bits_ - 1)) == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }
  bool subset_of(RelationSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  int size() const noexcept;

  RelationSet& operator|=(RelationSet other) noexcept {
    bits_ |= other.bits_;
    return *this;
  }

  // Comma-joined names in canonical order, e.g. "Before,Overlap".
  std::string to_string() const;

  friend constexpr bool operator==(RelationSet, RelationSet) = default;

 private:
  static constexpr std::uint8_t kFull = 0x1F;
  static constexpr std::uint8_t bit(CoarseRelation r) noexcept {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(r));
  }
  struct Raw {};
  constexpr RelationSet(Raw, std::uint8_t bits) noexcept : bits_(bits) {}

  std::uint8_t bits_;
};

RelationSet invert(RelationSet s) noexcept;

using CoarseTable = std::array<std::array<RelationSet, 5>, 5>;

// Built once by mapping each coarse relation to its Allen members,
// composing with the Allen table, and mapping the result back.
const CoarseTable& coarse_composition_table();

RelationSet compose(CoarseRelation r1, CoarseRelation r2);
RelationSet compose(RelationSet s1, RelationSet s2);

// Coarse relation of a to b, where [start, end) intervals are given by
// endpoints. Meeting intervals are Before; shared-endpoint containment and
// equality are Overlap.
template <typename T>
constexpr CoarseRelation classify(const T& as, const T& ae, const T& bs, const T& be) {
  if (!(bs < ae)) return CoarseRelation::Before;
  if (!(as < be)) return CoarseRelation::After;
  if (as == bs && ae == be) return CoarseRelation::Overlap;
  if (as < bs && be < ae) return CoarseRelation::Includes;
  if (bs < as && ae < be) return CoarseRelation::IncludedIn;
  return CoarseRelation::Overlap;
}

CoarseRelation compare_intervals(const Interval& a, const Interval& b) noexcept;
// Throws NotAnInterval unless both values are intervals.
CoarseRelation compare_intervals(const ResolvedTime& a, const ResolvedTime& b);

// Relation asserted by an edge label (parent relative to child); nullopt for
// DEPEND_ON.
std::optional<CoarseRelation> relation_of(EdgeLabel label) noexcept;

struct InferOptions {
  // Paths longer than this stop composing once the running set is full.
  std::size_t path_bound = 64;
};

// Relation set of node a relative to node b. Throws UnknownNode.
RelationSet infer_relation(const Document& doc, const NodeId& a, const NodeId& b,
                           const ResolvedMap& resolved, const InferOptions& options = {});

}  // namespace tdt
