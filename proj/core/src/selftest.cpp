#include "tdt/selftest.hpp"

#include <random>

#include "tdt/allen.hpp"
#include "tdt/allen_reference.hpp"
#include "tdt/inference.hpp"

namespace tdt {

namespace {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0

  friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
};

struct RationalInterval {
  Rational start;
  Rational end;
};

RationalInterval random_interval(std::mt19937_64& rng) {
  // Small denominators and a narrow range make shared endpoints common.
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  std::uniform_int_distribution<std::int64_t> num(0, 16);
  for (;;) {
    Rational a{num(rng), den(rng)};
    Rational b{num(rng), den(rng)};
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    return {a, b};
  }
}

CoarseRelation classify(const RationalInterval& a, const RationalInterval& b) {
  return tdt::classify(a.start, a.end, b.start, b.end);
}

std::string cell_name(const char* r1, const char* r2) {
  return std::string(r1) + " o " + r2;
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;

  const allen::CompositionTable& derived = allen::composition_table();
  const allen::CompositionTable transcribed = allen::reference::table();
  for (int i = 0; i < allen::kRelationCount; ++i) {
    for (int j = 0; j < allen::kRelationCount; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      if (derived[ui][uj] != transcribed[ui][uj]) {
        report.allen_mismatches.push_back(
            cell_name(allen::to_string(static_cast<allen::Relation>(i)),
                      allen::to_string(static_cast<allen::Relation>(j))) +
            ": derived " + allen::mask_to_string(derived[ui][uj]) + ", transcribed " +
            allen::mask_to_string(transcribed[ui][uj]));
      }
    }
  }

  for (CoarseRelation r1 : kCoarseRelations) {
    for (CoarseRelation r2 : kCoarseRelations) {
      std::uint8_t bits = 0;
      for (int i = 0; i < allen::kRelationCount; ++i) {
        if (!(allen_members(r1) & (1u << i))) continue;
        for (int j = 0; j < allen::kRelationCount; ++j) {
          if (!(allen_members(r2) & (1u << j))) continue;
          const allen::RelationMask m = transcribed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          for (int k = 0; k < allen::kRelationCount; ++k) {
            if (m & (1u << k)) {
              bits |= static_cast<std::uint8_t>(
                  1u << static_cast<unsigned>(coarse_of(static_cast<allen::Relation>(k))));
            }
          }
        }
      }
      const RelationSet expected = RelationSet::from_bits(bits);
      const RelationSet actual = compose(r1, r2);
      if (expected != actual) {
        report.coarse_mismatches.push_back(cell_name(to_string(r1), to_string(r2)) + ": table {" +
                                           actual.to_string() + "}, oracle {" +
                                           expected.to_string() + "}");
      }
    }
  }

  constexpr int kPoints = 6;
  for (int as = 0; as < kPoints; ++as)
    for (int ae = as + 1; ae < kPoints; ++ae)
      for (int bs = 0; bs < kPoints; ++bs)
        for (int be = bs + 1; be < kPoints; ++be)
          for (int cs = 0; cs < kPoints; ++cs)
            for (int ce = cs + 1; ce < kPoints; ++ce) {
              ++report.exhaustive_triples;
              const RelationSet allowed =
                  compose(tdt::classify(as, ae, bs, be), tdt::classify(bs, be, cs, ce));
              if (!allowed.contains(tdt::classify(as, ae, cs, ce))) ++report.exhaustive_violations;
            }

  std::mt19937_64 rng(options.seed);
  for (std::size_t n = 0; n < options.samples; ++n) {
    const RationalInterval a = random_interval(rng);
    const RationalInterval b = random_interval(rng);
    const RationalInterval c = random_interval(rng);
    ++report.samples;
    if (!compose(classify(a, b), classify(b, c)).contains(classify(a, c))) {
      ++report.sample_violations;
    }
  }
  return report;
}

std::string format_report(const SelftestReport& report) {
  std::string out;
  out += "allen table: " + std::to_string(report.allen_mismatches.size()) + " mismatches\n";
  for (const auto& m : report.allen_mismatches) out += "  " + m + "\n";
  out += "coarse table: " + std::to_string(report.coarse_mismatches.size()) + " mismatches\n";
  for (const auto& m : report.coarse_mismatches) out += "  " + m + "\n";
  out += "exhaustive: " + std::to_string(report.exhaustive_triples) + " triples, " +
         std::to_string(report.exhaustive_violations) + " violations\n";
  out += "monte-carlo: " + std::to_string(report.samples) + " triples, " +
         std::to_string(report.sample_violations) + " violations\n";
  out += report.ok() ? "selftest: ok\n" : "selftest: FAILED\n";
  return out;
}

}  // namespace tdt
