#include "tdt/allen.hpp"

namespace tdt::allen {

namespace {

constexpr std::array<const char*, kRelationCount> kNames = {
    "before",   "meets",    "overlaps",   "starts",        "during", "finishes", "equals",
    "finished-by", "contains", "started-by", "overlapped-by", "met-by", "after"};

CompositionTable derive() {
  // Six endpoints are enough to realize every ordering (with ties) of the
  // endpoints of three intervals.
  constexpr int kPoints = 6;
  CompositionTable table{};
  for (int as = 0; as < kPoints; ++as)
    for (int ae = as + 1; ae < kPoints; ++ae)
      for (int bs = 0; bs < kPoints; ++bs)
        for (int be = bs + 1; be < kPoints; ++be) {
          const auto ab = static_cast<std::size_t>(relate(as, ae, bs, be));
          for (int cs = 0; cs < kPoints; ++cs)
            for (int ce = cs + 1; ce < kPoints; ++ce) {
              const auto bc = static_cast<std::size_t>(relate(bs, be, cs, ce));
              table[ab][bc] |= bit(relate(as, ae, cs, ce));
            }
        }
  return table;
}

}  // namespace

const char* to_string(Relation r) noexcept { return kNames[static_cast<std::size_t>(r)]; }

Relation inverse(Relation r) noexcept {
  return static_cast<Relation>(kRelationCount - 1 - static_cast<int>(r));
}

const CompositionTable& composition_table() {
  static const CompositionTable table = derive();
  return table;
}

RelationMask compose(Relation r1, Relation r2) {
  return composition_table()[static_cast<std::size_t>(r1)][static_cast<std::size_t>(r2)];
}

std::string mask_to_string(RelationMask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < kRelationCount; ++i) {
    if (m & (1u << i)) {
      if (!first) out += ",";
      out += kNames[static_cast<std::size_t>(i)];
      first = false;
    }
  }
  return out + "}";
}

}  // namespace tdt::allen
