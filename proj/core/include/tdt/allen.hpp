#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace tdt::allen {

// Allen's thirteen basic relations between two intervals, a relative to b.
enum class Relation : std::uint8_t {
  Before,
  Meets,
  Overlaps,
  Starts,
  During,
  Finishes,
  Equals,
  FinishedBy,
  Contains,
  StartedBy,
  OverlappedBy,
  MetBy,
  After,
};

inline constexpr int kRelationCount = 13;

const char* to_string(Relation r) noexcept;

Relation inverse(Relation r) noexcept;

// Bit i set <=> Relation(i) is a member.
using RelationMask = std::uint16_t;

constexpr RelationMask bit(Relation r) noexcept {
  return static_cast<RelationMask>(1u << static_cast<unsigned>(r));
}

inline constexpr RelationMask kAll = (1u << kRelationCount) - 1;

// Relation of [as, ae) to [bs, be). Requires as < ae and bs < be.
template <typename T>
constexpr Relation relate(const T& as, const T& ae, const T& bs, const T& be) {
  if (ae < bs) return Relation::Before;
  if (ae == bs) return Relation::Meets;
  if (be < as) return Relation::After;
  if (be == as) return Relation::MetBy;
  if (as == bs && ae == be) return Relation::Equals;
  if (as == bs) return ae < be ? Relation::Starts : Relation::StartedBy;
  if (ae == be) return as < bs ? Relation::FinishedBy : Relation::Finishes;
  if (as < bs) return be < ae ? Relation::Contains : Relation::Overlaps;
  return ae < be ? Relation::During : Relation::OverlappedBy;
}

using CompositionTable = std::array<std::array<RelationMask, kRelationCount>, kRelationCount>;

// The 13x13 composition table, derived by enumerating every arrangement of
// three intervals over six integer endpoints rather than transcribed.
const CompositionTable& composition_table();

RelationMask compose(Relation r1, Relation r2);

std::string mask_to_string(RelationMask m);

}  // namespace tdt::allen
