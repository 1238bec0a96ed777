#include "tdt/normalizer.hpp"

#include <deque>

#include "tdt/errors.hpp"
#include "tdt/lexicon.hpp"

namespace tdt {

namespace chr = std::chrono;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

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

Weekday weekday_of(chr::sys_days d) {
  // chrono numbers Sunday as 0; ours start at Monday.
  const unsigned c = chr::weekday(d).c_encoding();
  return static_cast<Weekday>((c + 6) % 7);
}

ResolvedTime with_time_of_day(chr::sys_days day, const CalendarValue& time) {
  if (time.empty()) return Interval{day, day + chr::days(1), Granularity::Day};
  const chr::year_month_day ymd(day);
  CalendarValue v = time;
  v.year = static_cast<int>(ymd.year());
  v.month = static_cast<int>(static_cast<unsigned>(ymd.month()));
  v.day = static_cast<int>(static_cast<unsigned>(ymd.day()));
  return interval_of(v);
}

ResolvedTime resolve_weekday(const PartialTime& p, const Interval& parent, bool strict) {
  const Weekday want = *p.weekday;
  const chr::sys_days first = chr::floor<chr::days>(parent.start);
  std::vector<chr::sys_days> matches;
  for (chr::sys_days d = first; d < parent.end; d += chr::days(1)) {
    if (weekday_of(d) == want) {
      matches.push_back(d);
      if (!strict) break;
      if (matches.size() > 1) break;
    }
  }
  if (matches.size() > 1) {
    return Unresolved{std::string("weekday ") + to_string(want) +
                      " is ambiguous within its reference interval"};
  }
  if (!matches.empty()) return with_time_of_day(matches.front(), p.fields);

  // The reference interval holds no such weekday: take the nearest one,
  // preferring the past on a tie.
  int back = 0;
  while (weekday_of(first - chr::days(back)) != want) ++back;
  int fwd = 0;
  while (weekday_of(first + chr::days(fwd)) != want) ++fwd;
  const chr::sys_days pick = back <= fwd ? first - chr::days(back) : first + chr::days(fwd);
  return with_time_of_day(pick, p.fields);
}

ResolvedTime resolve_partial(const PartialTime& p, const Interval& parent, bool strict) {
  if (p.weekday) return resolve_weekday(p, parent, strict);

  const Granularity coarsest = p.fields.coarsest();
  // Every field coarser than the partial's own must come from the reference.
  if (coarsest != Granularity::Year &&
      static_cast<int>(parent.granularity) < static_cast<int>(coarsest) - 1) {
    return Unresolved{std::string("reference time at ") + to_string(parent.granularity) +
                      " granularity cannot supply fields above " + to_string(coarsest)};
  }
  const CalendarValue base = fields_of(parent.start);
  CalendarValue v;
  for (int g = 0; g <= static_cast<int>(p.fields.granularity()); ++g) {
    const auto gr = static_cast<Granularity>(g);
    const std::optional<int> value = g < static_cast<int>(coarsest) ? base.field(gr) : p.fields.field(gr);
    switch (gr) {
      case Granularity::Year: v.year = value; break;
      case Granularity::Month: v.month = value; break;
      case Granularity::Day: v.day = value; break;
      case Granularity::Hour: v.hour = value; break;
      case Granularity::Minute: v.minute = value; break;
      case Granularity::Second: v.second = value; break;
    }
  }
  return interval_of(v);
}

ResolvedTime resolve_offset(const OffsetTime& o, const Interval& parent) {
  const Timestamp shifted =
      add_units(parent.start, static_cast<long long>(o.sign) * o.magnitude, o.unit);
  const Granularity g = granularity_of(o.unit);
  const Timestamp start = floor_to(shifted, g);
  return Interval{start, add_units(start, 1, unit_of(g)), g};
}

}  // namespace

bool semantics_match_class(const TimexSemantics& semantics, TimexClass cls) noexcept {
  switch (cls) {
    case TimexClass::AbsoluteConcrete: return std::holds_alternative<AbsoluteTime>(semantics);
    case TimexClass::RelativeConcrete:
      return std::holds_alternative<PartialTime>(semantics) ||
             std::holds_alternative<OffsetTime>(semantics);
    case TimexClass::Vague: return std::holds_alternative<SymbolicTime>(semantics);
    case TimexClass::Unlocatable: return false;
  }
  return false;
}

ResolvedTime resolve_timex(const TimexSemantics& semantics, const ResolvedTime& parent,
                           const ResolveOptions& options) {
  check_semantics(semantics);
  const auto* reference = std::get_if<Interval>(&parent);
  return std::visit(
      overloaded{
          [](const AbsoluteTime& a) -> ResolvedTime { return interval_of(a.value); },
          [](const SymbolicTime& s) -> ResolvedTime { return SymbolicRegion{s.region}; },
          [&](const PartialTime& p) -> ResolvedTime {
            if (reference == nullptr) return Unresolved{"reference time is not an interval"};
            return resolve_partial(p, *reference, options.strict_weekdays);
          },
          [&](const OffsetTime& o) -> ResolvedTime {
            if (reference == nullptr) return Unresolved{"reference time is not an interval"};
            return resolve_offset(o, *reference);
          },
      },
      semantics);
}

std::optional<TimexSemantics> semantics_for(const TimexNode& timex, const Lexicon* lexicon) {
  if (timex.semantics) return timex.semantics;
  if (lexicon == nullptr) return std::nullopt;
  auto found = lexicon->lookup(timex.surface);
  if (found && semantics_match_class(*found, timex.cls)) return found;
  return std::nullopt;
}

ResolvedMap resolve_all(const Document& doc, const ResolveOptions& options) {
  const TemporalDependencyTree& tree = doc.tree;
  ResolvedMap out;

  std::deque<NodeId> queue{meta_id(MetaNodeKind::Root)};
  std::map<NodeId, std::vector<NodeId>> children;
  for (const Edge& e : tree.edges()) children[e.parent].push_back(e.child);

  while (!queue.empty()) {
    const NodeId id = queue.front();
    queue.pop_front();
    const Node& node = tree.node(id);
    if (const auto* m = std::get_if<MetaNode>(&node)) {
      switch (m->kind) {
        case MetaNodeKind::Root:
        case MetaNodeKind::Atemporal: out[id] = Unresolved{"not a time"}; break;
        case MetaNodeKind::Dct:
          if (doc.dct) {
            out[id] = interval_of(*doc.dct);
          } else {
            out[id] = Unresolved{"no document creation time"};
          }
          break;
        case MetaNodeKind::PresentRef: out[id] = SymbolicRegion{TimeRegion::Present}; break;
        case MetaNodeKind::PastRef: out[id] = SymbolicRegion{TimeRegion::Past}; break;
        case MetaNodeKind::FutureRef: out[id] = SymbolicRegion{TimeRegion::Future}; break;
      }
    } else if (const auto* t = std::get_if<TimexNode>(&node)) {
      const auto semantics = semantics_for(*t, options.lexicon);
      const NodeId& parent = tree.parent_edge(id)->parent;
      const auto pit = out.find(parent);
      if (!semantics) {
        out[id] = Unresolved{"no semantics"};
      } else if (pit == out.end()) {
        out[id] = Unresolved{"reference is not a time expression"};
      } else {
        try {
          out[id] = resolve_timex(*semantics, pit->second, options);
        } catch (const InvalidCalendar& e) {
          throw InvalidCalendar(id.str() + ": " + e.what());
        }
      }
    }
    if (const auto it = children.find(id); it != children.end()) {
      for (const NodeId& c : it->second) queue.push_back(c);
    }
  }
  return out;
}

std::string render(const ResolvedTime& value) {
  return std::visit(
      overloaded{
          [](const Interval& i) -> std::string {
            CalendarValue f = fields_of(i.start);
            const int g = static_cast<int>(i.granularity);
            if (g < 5) f.second.reset();
            if (g < 4) f.minute.reset();
            if (g < 3) f.hour.reset();
            if (g < 2) f.day.reset();
            if (g < 1) f.month.reset();
            return format_calendar_value(f);
          },
          [](const SymbolicRegion& s) -> std::string {
            switch (s.region) {
              case TimeRegion::Past: return "PAST_REF";
              case TimeRegion::Present: return "PRESENT_REF";
              case TimeRegion::Future: return "FUTURE_REF";
            }
            return "?";
          },
          [](const Unresolved& u) -> std::string { return "UNRESOLVED(" + u.reason + ")"; },
      },
      value);
}

}  // namespace tdt
