#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tdt {

struct SelftestOptions {
  std::size_t samples = 100000;
  std::uint64_t seed = 20111;
};

struct SelftestReport {
  // Cells where the derived Allen table differs from the transcribed one.
  std::vector<std::string> allen_mismatches;
  // Cells where the coarse table differs from the one built from the
  // transcribed Allen table.
  std::vector<std::string> coarse_mismatches;
  std::size_t exhaustive_triples = 0;
  std::size_t exhaustive_violations = 0;
  std::size_t samples = 0;
  std::size_t sample_violations = 0;

  bool ok() const noexcept {
    return allen_mismatches.empty() && coarse_mismatches.empty() && exhaustive_violations == 0 &&
           sample_violations == 0;
  }
};

// Checks the composition tables against the transcribed Allen table, every
// triple of intervals over six integer endpoints, and random triples of
// intervals with rational endpoints.
SelftestReport run_selftest(const SelftestOptions& options = {});

std::string format_report(const SelftestReport& report);

}  // namespace tdt
