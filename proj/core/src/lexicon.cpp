#include "tdt/lexicon.hpp"

#include <cctype>
#include <cstdlib>

namespace tdt {

namespace {

std::string key_of(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

AbsoluteTime year(int y) {
  CalendarValue v;
  v.year = y;
  return AbsoluteTime{v};
}

Lexicon make_demo() {
  Lexicon lex;
  for (int y : {1918, 1957, 1966, 2003, 2011}) lex.add(std::to_string(y), year(y));

  CalendarValue march;
  march.month = 3;
  lex.add("March", PartialTime{march, std::nullopt});
  lex.add("Thursday", PartialTime{{}, Weekday::Thu});

  // Normalized at second precision, as in "2003-04-05:08:00:00".
  CalendarValue eight;
  eight.hour = 8;
  eight.minute = 0;
  eight.second = 0;
  lex.add("8:00am", PartialTime{eight, std::nullopt});
  lex.add("8am", PartialTime{eight, std::nullopt});

  lex.add("next year", OffsetTime{+1, 1, OffsetUnit::Year});
  lex.add("last year", OffsetTime{-1, 1, OffsetUnit::Year});
  lex.add("10 minutes later", OffsetTime{+1, 10, OffsetUnit::Minute});
  lex.add("two days later", OffsetTime{+1, 2, OffsetUnit::Day});

  lex.add("once", SymbolicTime{TimeRegion::Past});
  lex.add("once upon the time", SymbolicTime{TimeRegion::Past});
  lex.add("recent years", SymbolicTime{TimeRegion::Present});
  lex.add("nowadays", SymbolicTime{TimeRegion::Present});
  lex.add("in the future", SymbolicTime{TimeRegion::Future});
  return lex;
}

}  // namespace

void Lexicon::add(std::string_view surface, TimexSemantics semantics) {
  entries_.insert_or_assign(key_of(surface), std::move(semantics));
}

std::optional<TimexSemantics> Lexicon::lookup(std::string_view surface) const {
  const auto it = entries_.find(key_of(surface));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

const Lexicon& Lexicon::demo() {
  static const Lexicon lexicon = make_demo();
  return lexicon;
}

const Lexicon* demo_lexicon_from_env() {
  const char* v = std::getenv("TDT_DEMO_LEXICON");
  if (v != nullptr && key_of(v) == "off") return nullptr;
  return &Lexicon::demo();
}

}  // namespace tdt
