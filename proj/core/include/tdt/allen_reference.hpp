#pragma once

// Allen's composition table as usually printed, transcribed cell by cell.
// Used only to check the derived table; the library never reads it otherwise.

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tdt/allen.hpp"

namespace tdt::allen::reference {

// "full" abbreviates all thirteen relations.
inline constexpr std::array<std::string_view, 12> kOrder = {"<",  ">",  "d", "di", "o", "oi",
                                                            "m",  "mi", "s", "si", "f", "fi"};

// kTable[row][col] = composition of kOrder[row] with kOrder[col].
inline constexpr std::array<std::array<std::string_view, 12>, 12> kTable = {{
    // <
    {"<", "full", "< o m d s", "<", "<", "< o m d s", "<", "< o m d s", "<", "<", "< o m d s", "<"},
    // >
    {"full", ">", "> oi mi d f", ">", "> oi mi d f", ">", "> oi mi d f", ">", "> oi mi d f", ">",
     ">", ">"},
    // d
    {"<", ">", "d", "full", "< o m d s", "> oi mi d f", "<", ">", "d", "> oi mi d f", "d",
     "< o m d s"},
    // di
    {"< o m di fi", "> oi di mi si", "o oi d s f di si fi =", "di", "o di fi", "oi di si",
     "o di fi", "oi di si", "di fi o", "di", "di si oi", "di"},
    // o
    {"<", "> oi di mi si", "o d s", "< o m di fi", "< o m", "o oi d s f di si fi =", "<",
     "oi di si", "o", "di fi o", "d s o", "< o m"},
    // oi
    {"< o m di fi", ">", "oi d f", "> oi mi di si", "o oi d s f di si fi =", "> oi mi",
     "o di fi", ">", "oi d f", "oi > mi", "oi", "oi di si"},
    // m
    {"<", "> oi mi di si", "o d s", "<", "<", "o d s", "<", "f fi =", "m", "m", "d s o", "<"},
    // mi
    {"< o m di fi", ">", "oi d f", ">", "oi d f", ">", "s si =", ">", "oi d f", ">", "mi", "mi"},
    // s
    {"<", ">", "d", "< o m di fi", "< o m", "oi d f", "<", "mi", "s", "s si =", "d", "< m o"},
    // si
    {"< o m di fi", ">", "oi d f", "di", "o di fi", "oi", "o di fi", "mi", "s si =", "si", "oi",
     "di"},
    // f
    {"<", ">", "d", "> oi mi di si", "o d s", "> oi mi", "m", ">", "d", "oi > mi", "f", "f fi ="},
    // fi
    {"<", "> oi mi di si", "o d s", "di", "o", "oi di si", "m", "oi di si", "o", "di", "f fi =",
     "fi"},
}};

inline Relation from_symbol(std::string_view s) {
  static constexpr std::array<std::string_view, kRelationCount> kSymbols = {
      "<", "m", "o", "s", "d", "f", "=", "fi", "di", "si", "oi", "mi", ">"};
  for (int i = 0; i < kRelationCount; ++i) {
    if (kSymbols[static_cast<std::size_t>(i)] == s) return static_cast<Relation>(i);
  }
  throw std::invalid_argument("unknown Allen symbol '" + std::string(s) + "'");
}

inline RelationMask parse_cell(std::string_view cell) {
  if (cell == "full") return kAll;
  RelationMask m = 0;
  std::istringstream in{std::string(cell)};
  std::string sym;
  while (in >> sym) m |= bit(from_symbol(sym));
  return m;
}

// The transcribed table in Relation order; rows and columns for "equals" are
// the identity.
inline CompositionTable table() {
  CompositionTable out{};
  const Relation eq = Relation::Equals;
  for (int i = 0; i < kRelationCount; ++i) {
    const auto r = static_cast<Relation>(i);
    out[static_cast<std::size_t>(eq)][static_cast<std::size_t>(i)] = bit(r);
    out[static_cast<std::size_t>(i)][static_cast<std::size_t>(eq)] = bit(r);
  }
  for (std::size_t row = 0; row < kOrder.size(); ++row) {
    for (std::size_t col = 0; col < kOrder.size(); ++col) {
      const auto r1 = static_cast<std::size_t>(from_symbol(kOrder[row]));
      const auto r2 = static_cast<std::size_t>(from_symbol(kOrder[col]));
      out[r1][r2] = parse_cell(kTable[row][col]);
    }
  }
  return out;
}

}  // namespace tdt::allen::reference
