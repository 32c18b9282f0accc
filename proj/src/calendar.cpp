#include "weekfx/calendar.hpp"

#include <charconv>

#include "weekfx/errors.hpp"

namespace weekfx {

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) return 0;
    if (month == 2 && is_leap_year(year)) return 29;
    return kDays[month - 1];
}

bool is_valid_date(const CivilDate& d) {
    return d.month >= 1 && d.month <= 12 && d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

bool is_valid_month_day(const MonthDay& md) {
    if (md.month < 1 || md.month > 12 || md.day < 1) return false;
    // Feb 29 counts as valid; it selects a day only in leap years.
    int max_day = (md.month == 2) ? 29 : days_in_month(2001, md.month);
    return md.day <= max_day;
}

// Civil-from-days and days-from-civil follow the classic era-based algorithm
// for the proleptic Gregorian calendar, epoch 1970-01-01.
std::int64_t days_from_civil(const CivilDate& d) {
    std::int64_t y = d.year;
    const int m = d.month;
    const int day = d.day;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(day) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t days) {
    days += 719468;
    const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(days - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned day = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(day)};
}

CivilDate add_days(const CivilDate& d, std::int64_t n) {
    return civil_from_days(days_from_civil(d) + n);
}

std::int64_t days_between(const CivilDate& from, const CivilDate& to) {
    return days_from_civil(to) - days_from_civil(from);
}

int weekday_of(const CivilDate& d) {
    // 1970-01-01 was a Thursday (= 4 with Sunday = 0).
    const std::int64_t z = days_from_civil(d) + 4;
    return static_cast<int>(((z % 7) + 7) % 7);
}

namespace {

int parse_int_field(std::string_view text, std::size_t pos, std::size_t len) {
    int value = 0;
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, value);
    if (ec != std::errc{} || ptr != first + len) {
        throw ValidationError("malformed ISO date: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

CivilDate parse_iso_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw ValidationError("malformed ISO date: '" + std::string(text) + "' (want YYYY-MM-DD)");
    }
    CivilDate d;
    d.year = parse_int_field(text, 0, 4);
    d.month = parse_int_field(text, 5, 2);
    d.day = parse_int_field(text, 8, 2);
    if (!is_valid_date(d)) {
        throw ValidationError("no such calendar date: '" + std::string(text) + "'");
    }
    return d;
}

std::string format_iso_date(const CivilDate& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

bool month_day_in_window(const MonthDay& md, const MonthDay& from, const MonthDay& to) {
    if (from <= to) return from <= md && md <= to;
    return md >= from || md <= to;  // window wraps the year end
}

}  // namespace weekfx
