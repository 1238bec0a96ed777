#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tdt/format.hpp"
#include "tdt/model.hpp"

namespace tdt::testing {

std::filesystem::path fixture_path(std::string_view relative);
Document load_fixture(std::string_view relative);

// Sorted paths of every fixture in a fixture subdirectory.
std::vector<std::filesystem::path> fixtures_in(std::string_view subdir);

struct GenOptions {
  std::size_t min_timexes = 1;
  std::size_t max_timexes = 6;
  std::size_t min_events = 1;
  std::size_t max_events = 12;
  std::optional<Genre> genre;
  // Only absolute and relative timexes, all with semantics, and a DCT.
  bool fully_resolvable = false;
};

// A random document that passes STRICT validation. Node IDs are t1.. and
// e1.. in text order; some surfaces are non-ASCII.
Document random_document(std::mt19937_64& rng, const GenOptions& options = {},
                         const std::string& id = "doc");

// `documents` random documents; the first `doubled` of them also get a second,
// independently generated annotation of the same text by another annotator.
Corpus random_corpus(std::mt19937_64& rng, std::size_t documents, std::size_t doubled);

}  // namespace tdt::testing
