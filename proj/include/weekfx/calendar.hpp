#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace weekfx {

/// A proleptic-Gregorian calendar date. No time zones, no intra-day time.
struct CivilDate {
    int year = 1970;
    int month = 1;  ///< 1..12
    int day = 1;    ///< 1..days_in_month

    auto operator<=>(const CivilDate&) const = default;
};

/// A recurring month-day (e.g. July 01), used for seasonal windows.
struct MonthDay {
    int month = 1;
    int day = 1;

    auto operator<=>(const MonthDay&) const = default;
};

[[nodiscard]] bool is_leap_year(int year);
[[nodiscard]] int days_in_month(int year, int month);
[[nodiscard]] bool is_valid_date(const CivilDate& d);

/// True if the month-day exists in at least one year (Feb 29 allowed).
[[nodiscard]] bool is_valid_month_day(const MonthDay& md);

/// Days since 1970-01-01 (negative before the epoch).
[[nodiscard]] std::int64_t days_from_civil(const CivilDate& d);
[[nodiscard]] CivilDate civil_from_days(std::int64_t days);

[[nodiscard]] CivilDate add_days(const CivilDate& d, std::int64_t n);

/// Whole days from `from` to `to` (positive when `to` is later).
[[nodiscard]] std::int64_t days_between(const CivilDate& from, const CivilDate& to);

/// Weekday index, Sunday = 0 .. Saturday = 6.
[[nodiscard]] int weekday_of(const CivilDate& d);

/// Parses strict ISO-8601 `YYYY-MM-DD`. Throws ValidationError on malformed
/// or non-existent dates.
[[nodiscard]] CivilDate parse_iso_date(std::string_view text);

[[nodiscard]] std::string format_iso_date(const CivilDate& d);

/// True when `md` lies inside the inclusive month-day window [from, to].
/// A window with from > to wraps around the end of the year.
[[nodiscard]] bool month_day_in_window(const MonthDay& md, const MonthDay& from,
                                       const MonthDay& to);

inline const char* const kWeekdayNames[7] = {"Sun", "Mon", "Tue", "Wed",
                                             "Thu", "Fri", "Sat"};

}  // namespace weekfx
