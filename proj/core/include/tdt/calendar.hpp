#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace tdt {

enum class Granularity : std::uint8_t { Year, Month, Day, Hour, Minute, Second };

enum class Weekday : std::uint8_t { Mon, Tue, Wed, Thu, Fri, Sat, Sun };

// General past / present / future, the referents of the symbolic meta nodes.
enum class TimeRegion : std::uint8_t { Past, Present, Future };

enum class OffsetUnit : std::uint8_t { Year, Month, Week, Day, Hour, Minute, Second };

const char* to_string(Granularity g) noexcept;
const char* to_string(Weekday d) noexcept;
const char* to_string(TimeRegion r) noexcept;
const char* to_string(OffsetUnit u) noexcept;

std::optional<Weekday> weekday_from_string(std::string_view s) noexcept;
std::optional<TimeRegion> region_from_string(std::string_view s) noexcept;
std::optional<OffsetUnit> offset_unit_from_string(std::string_view s) noexcept;

// A calendar value with some fields populated. Absolute values populate a
// contiguous prefix starting at the year; partial values leave the coarse
// end empty ("March" is month=3 only).
struct CalendarValue {
  std::optional<int> year;
  std::optional<int> month;
  std::optional<int> day;
  std::optional<int> hour;
  std::optional<int> minute;
  std::optional<int> second;

  bool empty() const noexcept;
  // Finest populated field. Undefined for an empty value.
  Granularity granularity() const noexcept;
  // Coarsest populated field. Undefined for an empty value.
  Granularity coarsest() const noexcept;
  std::optional<int> field(Granularity g) const noexcept;

  friend bool operator==(const CalendarValue&, const CalendarValue&) = default;
};

// Throws InvalidCalendar unless populated fields are contiguous, in range,
// and (when year, month and day are all present) name a real date.
void check_calendar(const CalendarValue& value);

// Throws InvalidCalendar unless `value` is non-empty, starts at the year and
// passes check_calendar.
void check_absolute(const CalendarValue& value);

// "2003", "2003-03", "2003-04-05", "2003-04-05T08", "2003-04-05T08:00",
// "2003-04-05T08:00:00". A ':' is accepted in place of the 'T'.
// Throws InvalidCalendar on malformed input.
CalendarValue parse_calendar_value(std::string_view text);

// Inverse of parse_calendar_value for absolute values.
std::string format_calendar_value(const CalendarValue& value);

struct AbsoluteTime {
  CalendarValue value;
  friend bool operator==(const AbsoluteTime&, const AbsoluteTime&) = default;
};

// Underspecified expression: either calendar fields with the coarse end
// missing, or a weekday optionally followed by time-of-day fields.
struct PartialTime {
  CalendarValue fields;
  std::optional<Weekday> weekday;
  friend bool operator==(const PartialTime&, const PartialTime&) = default;
};

struct OffsetTime {
  int sign = 1;
  int magnitude = 1;
  OffsetUnit unit = OffsetUnit::Day;
  friend bool operator==(const OffsetTime&, const OffsetTime&) = default;
};

struct SymbolicTime {
  TimeRegion region = TimeRegion::Present;
  friend bool operator==(const SymbolicTime&, const SymbolicTime&) = default;
};

using TimexSemantics = std::variant<AbsoluteTime, PartialTime, OffsetTime, SymbolicTime>;

// Throws InvalidCalendar if the semantics are internally malformed.
void check_semantics(const TimexSemantics& semantics);

using Timestamp = std::chrono::sys_seconds;

// Half-open [start, end) at one-second resolution.
struct Interval {
  Timestamp start;
  Timestamp end;
  Granularity granularity = Granularity::Second;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct SymbolicRegion {
  TimeRegion region = TimeRegion::Present;
  friend bool operator==(const SymbolicRegion&, const SymbolicRegion&) = default;
};

struct Unresolved {
  std::string reason;
  friend bool operator==(const Unresolved&, const Unresolved&) = default;
};

using ResolvedTime = std::variant<Interval, SymbolicRegion, Unresolved>;

// The interval [floor(g), floor(g) + 1 unit of g) of an absolute value.
Interval interval_of(const CalendarValue& absolute);

// Calendar fields of a timestamp, all populated down to the second.
CalendarValue fields_of(Timestamp t);

// Start of the `g` unit containing `t`.
Timestamp floor_to(Timestamp t, Granularity g);

// Granularity of an offset result. Weeks resolve to days.
Granularity granularity_of(OffsetUnit unit) noexcept;

// Adds `amount` units to `t`; months and years clamp to the month end.
Timestamp add_units(Timestamp t, long long amount, OffsetUnit unit);

}  // namespace tdt
