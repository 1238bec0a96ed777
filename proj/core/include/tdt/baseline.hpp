#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "tdt/format.hpp"
#include "tdt/model.hpp"

namespace tdt {

class Lexicon;

enum class GenreMode { Auto, News, Narrative };

const char* to_string(GenreMode m) noexcept;
std::optional<GenreMode> genre_mode_from_string(std::string_view s) noexcept;

struct ParserConfig {
  GenreMode genre_mode = GenreMode::Auto;
  // Largest sentence distance between a node and a candidate parent.
  std::size_t window = 2;
  // Source of semantics for timexes that carry none.
  const Lexicon* lexicon = nullptr;
};

// Attaches every node by fixed heuristics, scanning left to right:
//   absolute timex  -> ROOT
//   relative timex  -> nearest preceding concrete timex in the window, else DCT
//   vague timex     -> the region its semantics name; else PAST_REF at the
//                      start of a narrative, else PRESENT_REF
//   eventive event  -> nearest timex in its sentence (INCLUDES), else nearest
//                      preceding eventive event in the window (BEFORE), else
//                      DCT (news) or PAST_REF (narrative) with OVERLAP
//   stative event   -> nearest preceding eventive event in the window
//                      (OVERLAP), else the eventive chain from the timex step
// Unlocatable timexes stay unattached. Ties go to the smaller start offset,
// then the smaller ID. Throws std::invalid_argument for a zero window and
// MissingSemantics for a relative timex without semantics in a document
// without a creation time.
Document predict_tree(const Markables& input, const ParserConfig& config = {});

// Ignores the document's edges.
Document predict_tree(const Document& doc, const ParserConfig& config = {});

}  // namespace tdt
