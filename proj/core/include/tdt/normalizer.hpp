#pragma once

#include <map>
#include <string>

#include "tdt/calendar.hpp"
#include "tdt/model.hpp"

namespace tdt {

class Lexicon;

struct ResolveOptions {
  // Consulted for timexes that carry no semantics of their own.
  const Lexicon* lexicon = nullptr;
  // A weekday that matches more than one day of its reference interval
  // resolves to UNRESOLVED instead of the earliest match.
  bool strict_weekdays = false;
};

// Interprets one time expression against its reference time. Throws
// InvalidCalendar when the filled-in fields name an impossible date.
ResolvedTime resolve_timex(const TimexSemantics& semantics, const ResolvedTime& parent,
                           const ResolveOptions& options = {});

using ResolvedMap = std::map<NodeId, ResolvedTime>;

// Resolves every meta and timex node of the tree, parents before children.
// InvalidCalendar is rethrown with the node ID prefixed to the message.
ResolvedMap resolve_all(const Document& doc, const ResolveOptions& options = {});

// Semantics for a timex: its own, else the lexicon's if the class agrees.
std::optional<TimexSemantics> semantics_for(const TimexNode& timex, const Lexicon* lexicon);

// "2003", "2003-03", "2003-04-05T08:00:00", "PAST_REF", "UNRESOLVED(reason)".
std::string render(const ResolvedTime& value);

// Semantics variant that a timex class must carry.
bool semantics_match_class(const TimexSemantics& semantics, TimexClass cls) noexcept;

}  // namespace tdt
