#include "tdt/calendar.hpp"

#include <array>
#include <cstdio>

#include "tdt/errors.hpp"

namespace tdt {

namespace chr = std::chrono;

const char* to_string(Granularity g) noexcept {
  switch (g) {
    case Granularity::Year: return "YEAR";
    case Granularity::Month: return "MONTH";
    case Granularity::Day: return "DAY";
    case Granularity::Hour: return "HOUR";
    case Granularity::Minute: return "MINUTE";
    case Granularity::Second: return "SECOND";
  }
  return "?";
}

namespace {

constexpr std::array<const char*, 7> kWeekdays = {"MON", "TUE", "WED", "THU",
                                                  "FRI", "SAT", "SUN"};
constexpr std::array<const char*, 3> kRegions = {"PAST", "PRESENT", "FUTURE"};
constexpr std::array<const char*, 7> kUnits = {"YEAR", "MONTH",  "WEEK",  "DAY",
                                               "HOUR", "MINUTE", "SECOND"};

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<const char*, N>& names, std::string_view s) {
  for (std::size_t i = 0; i < N; ++i) {
    if (s == names[i]) return static_cast<E>(i);
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(Weekday d) noexcept { return kWeekdays[static_cast<std::size_t>(d)]; }
const char* to_string(TimeRegion r) noexcept { return kRegions[static_cast<std::size_t>(r)]; }
const char* to_string(OffsetUnit u) noexcept { return kUnits[static_cast<std::size_t>(u)]; }

std::optional<Weekday> weekday_from_string(std::string_view s) noexcept {
  return lookup<Weekday>(kWeekdays, s);
}
std::optional<TimeRegion> region_from_string(std::string_view s) noexcept {
  return lookup<TimeRegion>(kRegions, s);
}
std::optional<OffsetUnit> offset_unit_from_string(std::string_view s) noexcept {
  return lookup<OffsetUnit>(kUnits, s);
}

std::optional<int> CalendarValue::field(Granularity g) const noexcept {
  switch (g) {
    case Granularity::Year: return year;
    case Granularity::Month: return month;
    case Granularity::Day: return day;
    case Granularity::Hour: return hour;
    case Granularity::Minute: return minute;
    case Granularity::Second: return second;
  }
  return std::nullopt;
}

bool CalendarValue::empty() const noexcept {
  return !year && !month && !day && !hour && !minute && !second;
}

Granularity CalendarValue::granularity() const noexcept {
  for (int g = 5; g >= 0; --g) {
    if (field(static_cast<Granularity>(g))) return static_cast<Granularity>(g);
  }
  return Granularity::Year;
}

Granularity CalendarValue::coarsest() const noexcept {
  for (int g = 0; g <= 5; ++g) {
    if (field(static_cast<Granularity>(g))) return static_cast<Granularity>(g);
  }
  return Granularity::Year;
}

namespace {

int max_day(std::optional<int> year, int month) {
  if (year) {
    return static_cast<int>(static_cast<unsigned>(
        chr::year_month_day_last(chr::year(*year), chr::month_day_last(chr::month(month)))
            .day()));
  }
  static constexpr std::array<int, 12> kMax = {31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return kMax[static_cast<std::size_t>(month - 1)];
}

[[noreturn]] void bad(const std::string& what) { throw InvalidCalendar(what); }

void check_range(std::optional<int> v, int lo, int hi, const char* name) {
  if (v && (*v < lo || *v > hi)) {
    bad(std::string(name) + " " + std::to_string(*v) + " out of range [" + std::to_string(lo) +
        ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

void check_calendar(const CalendarValue& v) {
  if (v.empty()) return;
  const int lo = static_cast<int>(v.coarsest());
  const int hi = static_cast<int>(v.granularity());
  for (int g = lo; g <= hi; ++g) {
    if (!v.field(static_cast<Granularity>(g))) {
      bad(std::string("calendar fields not contiguous: ") +
          to_string(static_cast<Granularity>(g)) + " missing");
    }
  }
  check_range(v.year, 1, 9999, "year");
  check_range(v.month, 1, 12, "month");
  check_range(v.day, 1, 31, "day");
  check_range(v.hour, 0, 23, "hour");
  check_range(v.minute, 0, 59, "minute");
  check_range(v.second, 0, 59, "second");
  if (v.day && v.month && *v.day > max_day(v.year, *v.month)) {
    std::string date = v.year ? std::to_string(*v.year) + "-" : std::string("--");
    bad("invalid date " + date + std::to_string(*v.month) + "-" + std::to_string(*v.day));
  }
}

void check_absolute(const CalendarValue& v) {
  if (v.empty() || !v.year) bad("absolute calendar value must start at the year");
  check_calendar(v);
}

CalendarValue parse_calendar_value(std::string_view text) {
  CalendarValue v;
  std::size_t pos = 0;
  auto digits = [&](std::size_t n, const char* name) {
    if (pos + n > text.size()) bad("truncated " + std::string(name) + " in '" + std::string(text) + "'");
    int out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const char c = text[pos + i];
      if (c < '0' || c > '9') bad("expected digit in '" + std::string(text) + "'");
      out = out * 10 + (c - '0');
    }
    pos += n;
    return out;
  };
  auto sep = [&](std::initializer_list<char> allowed) {
    if (pos >= text.size()) return false;
    for (char c : allowed) {
      if (text[pos] == c) {
        ++pos;
        return true;
      }
    }
    bad("unexpected character '" + std::string(1, text[pos]) + "' in '" + std::string(text) + "'");
  };

  v.year = digits(4, "year");
  if (sep({'-'})) {
    v.month = digits(2, "month");
    if (sep({'-'})) {
      v.day = digits(2, "day");
      if (sep({'T', ':'})) {
        v.hour = digits(2, "hour");
        if (sep({':'})) {
          v.minute = digits(2, "minute");
          if (sep({':'})) v.second = digits(2, "second");
        }
      }
    }
  }
  if (pos != text.size()) bad("trailing characters in '" + std::string(text) + "'");
  check_absolute(v);
  return v;
}

std::string format_calendar_value(const CalendarValue& v) {
  char buf[32];
  std::string out;
  std::snprintf(buf, sizeof buf, "%04d", v.year.value_or(0));
  out = buf;
  if (!v.month) return out;
  std::snprintf(buf, sizeof buf, "-%02d", *v.month);
  out += buf;
  if (!v.day) return out;
  std::snprintf(buf, sizeof buf, "-%02d", *v.day);
  out += buf;
  if (!v.hour) return out;
  std::snprintf(buf, sizeof buf, "T%02d", *v.hour);
  out += buf;
  if (!v.minute) return out;
  std::snprintf(buf, sizeof buf, ":%02d", *v.minute);
  out += buf;
  if (!v.second) return out;
  std::snprintf(buf, sizeof buf, ":%02d", *v.second);
  out += buf;
  return out;
}

void check_semantics(const TimexSemantics& semantics) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AbsoluteTime>) {
          check_absolute(s.value);
        } else if constexpr (std::is_same_v<T, PartialTime>) {
          if (s.fields.year) bad("partial value must leave the year unspecified");
          if (s.weekday) {
            if (!s.fields.empty() && (s.fields.month || s.fields.day)) {
              bad("weekday partial may only add time-of-day fields");
            }
            if (!s.fields.empty() && s.fields.coarsest() != Granularity::Hour) {
              bad("weekday partial time must start at the hour");
            }
          } else if (s.fields.empty()) {
            bad("partial value has no fields");
          }
          check_calendar(s.fields);
        } else if constexpr (std::is_same_v<T, OffsetTime>) {
          if (s.sign != 1 && s.sign != -1) bad("offset sign must be +1 or -1");
          if (s.magnitude < 1) bad("offset magnitude must be positive");
        }
      },
      semantics);
}

namespace {

Timestamp make_timestamp(chr::year_month_day ymd, int h, int m, int s) {
  return chr::sys_days(ymd) + chr::hours(h) + chr::minutes(m) + chr::seconds(s);
}

OffsetUnit unit_of(Granularity g) {
  switch (g) {
    case Granularity::Year: return OffsetUnit::Year;
    case Granularity::Month: return OffsetUnit::Month;
    case Granularity::Day: return OffsetUnit::Day;
    case Granularity::Hour: return OffsetUnit::Hour;
    case Granularity::Minute: return OffsetUnit::Minute;
    case Granularity::Second: return OffsetUnit::Second;
  }
  return OffsetUnit::Second;
}

}  // namespace

CalendarValue fields_of(Timestamp t) {
  const auto day = chr::floor<chr::days>(t);
  const chr::year_month_day ymd(day);
  const chr::hh_mm_ss hms(t - day);
  CalendarValue v;
  v.year = static_cast<int>(ymd.year());
  v.month = static_cast<int>(static_cast<unsigned>(ymd.month()));
  v.day = static_cast<int>(static_cast<unsigned>(ymd.day()));
  v.hour = static_cast<int>(hms.hours().count());
  v.minute = static_cast<int>(hms.minutes().count());
  v.second = static_cast<int>(hms.seconds().count());
  return v;
}

Timestamp floor_to(Timestamp t, Granularity g) {
  const CalendarValue f = fields_of(t);
  const int month = g >= Granularity::Month ? *f.month : 1;
  const int day = g >= Granularity::Day ? *f.day : 1;
  const int hour = g >= Granularity::Hour ? *f.hour : 0;
  const int minute = g >= Granularity::Minute ? *f.minute : 0;
  const int second = g >= Granularity::Second ? *f.second : 0;
  const chr::year_month_day ymd{chr::year(*f.year), chr::month(static_cast<unsigned>(month)),
                                chr::day(static_cast<unsigned>(day))};
  return make_timestamp(ymd, hour, minute, second);
}

Timestamp add_units(Timestamp t, long long amount, OffsetUnit unit) {
  switch (unit) {
    case OffsetUnit::Year:
    case OffsetUnit::Month: {
      const auto day = chr::floor<chr::days>(t);
      const auto time_of_day = t - day;
      chr::year_month_day ymd(day);
      const chr::months delta(unit == OffsetUnit::Year ? amount * 12 : amount);
      chr::year_month_day shifted = ymd + delta;
      if (!shifted.ok()) {
        shifted = chr::year_month_day_last(shifted.year(), chr::month_day_last(shifted.month()));
      }
      return chr::sys_days(shifted) + time_of_day;
    }
    case OffsetUnit::Week: return t + chr::days(7 * amount);
    case OffsetUnit::Day: return t + chr::days(amount);
    case OffsetUnit::Hour: return t + chr::hours(amount);
    case OffsetUnit::Minute: return t + chr::minutes(amount);
    case OffsetUnit::Second: return t + chr::seconds(amount);
  }
  return t;
}

Interval interval_of(const CalendarValue& v) {
  check_absolute(v);
  const Granularity g = v.granularity();
  const chr::year_month_day ymd{chr::year(*v.year), chr::month(static_cast<unsigned>(v.month.value_or(1))),
                                chr::day(static_cast<unsigned>(v.day.value_or(1)))};
  const Timestamp start = make_timestamp(ymd, v.hour.value_or(0), v.minute.value_or(0),
                                         v.second.value_or(0));
  return Interval{start, add_units(start, 1, unit_of(g)), g};
}

Granularity granularity_of(OffsetUnit u) noexcept {
  switch (u) {
    case OffsetUnit::Year: return Granularity::Year;
    case OffsetUnit::Month: return Granularity::Month;
    case OffsetUnit::Week:
    case OffsetUnit::Day: return Granularity::Day;
    case OffsetUnit::Hour: return Granularity::Hour;
    case OffsetUnit::Minute: return Granularity::Minute;
    case OffsetUnit::Second: return Granularity::Second;
  }
  return Granularity::Second;
}


}  // namespace tdt
