#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tdt/calendar.hpp"

namespace tdt {

// Surface-string to semantics table. Lookups are case-insensitive and ignore
// surrounding whitespace.
class Lexicon {
 public:
  void add(std::string_view surface, TimexSemantics semantics);
  std::optional<TimexSemantics> lookup(std::string_view surface) const;
  std::size_t size() const noexcept { return entries_.size(); }

  // English surfaces from the worked examples ("2003", "March", "next year",
  // "8:00am", "10 minutes later", ...).
  static const Lexicon& demo();

 private:
  std::map<std::string, TimexSemantics> entries_;
};

// The demo lexicon unless the environment sets TDT_DEMO_LEXICON=off.
const Lexicon* demo_lexicon_from_env();

}  // namespace tdt
