#include <doctest.h>

#include "weekfx/calendar.hpp"
#include "weekfx/errors.hpp"
#include "weekfx/rng.hpp"

using namespace weekfx;

namespace {

// Independent day-of-week oracle: Zeller's congruence, remapped to Sunday=0.
int zeller_weekday(const CivilDate& date) {
    int q = date.day;
    int m = date.month;
    int y = date.year;
    if (m < 3) {
        m += 12;
        y -= 1;
    }
    const int K = ((y % 100) + 100) % 100;
    const int J = (y - K) / 100;
    const int h = ((q + (13 * (m + 1)) / 5 + K + K / 4 + J / 4 + 5 * J) % 7 + 7) % 7;
    return (h + 6) % 7;  // h: 0=Saturday .. 6=Friday
}

}  // namespace

TEST_CASE("weekday_of matches known dates") {
    CHECK(weekday_of({2013, 1, 1}) == 2);    // Tuesday
    CHECK(weekday_of({2014, 12, 31}) == 3);  // Wednesday
    CHECK(weekday_of({1970, 1, 1}) == 4);    // Thursday
    CHECK(weekday_of({2000, 1, 1}) == 6);    // Saturday
}

TEST_CASE("weekday_of is 7-periodic") {
    const CivilDate dates[] = {{2013, 1, 1}, {1999, 12, 31}, {2024, 2, 29}, {1900, 3, 15}};
    for (const CivilDate& d : dates) {
        CHECK(weekday_of(add_days(d, 7)) == weekday_of(d));
        CHECK(weekday_of(add_days(d, -7)) == weekday_of(d));
        CHECK(weekday_of(add_days(d, 700)) == weekday_of(d));
    }
}

TEST_CASE("weekday_of agrees with the Zeller oracle on 10000 random dates") {
    rng::Xoshiro256pp gen(20240501);
    for (int i = 0; i < 10000; ++i) {
        // years 1600..2400
        const int year = 1600 + static_cast<int>(gen.next() % 801);
        const int month = 1 + static_cast<int>(gen.next() % 12);
        const int day = 1 + static_cast<int>(gen.next() % days_in_month(year, month));
        const CivilDate d{year, month, day};
        REQUIRE(weekday_of(d) == zeller_weekday(d));
    }
}

TEST_CASE("civil round trip and arithmetic") {
    rng::Xoshiro256pp gen(7);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t days = static_cast<std::int64_t>(gen.next() % 200000) - 100000;
        const CivilDate d = civil_from_days(days);
        CHECK(days_from_civil(d) == days);
        CHECK(is_valid_date(d));
    }
    CHECK(days_between({2013, 1, 1}, {2014, 12, 31}) == 729);
    CHECK(add_days({2013, 1, 1}, 729) == CivilDate{2014, 12, 31});
    CHECK(add_days({2013, 2, 28}, 1) == CivilDate{2013, 3, 1});
    CHECK(add_days({2016, 2, 28}, 1) == CivilDate{2016, 2, 29});
}

TEST_CASE("leap years") {
    CHECK(is_leap_year(2000));
    CHECK(is_leap_year(2016));
    CHECK_FALSE(is_leap_year(1900));
    CHECK_FALSE(is_leap_year(2013));
    CHECK(days_in_month(2016, 2) == 29);
    CHECK(days_in_month(2013, 2) == 28);
}

TEST_CASE("ISO parsing and formatting") {
    const CivilDate d = parse_iso_date("2013-07-04");
    CHECK(d == CivilDate{2013, 7, 4});
    CHECK(format_iso_date(d) == "2013-07-04");
    CHECK_THROWS_AS((void)parse_iso_date("2013-7-4"), ValidationError);
    CHECK_THROWS_AS((void)parse_iso_date("2013-02-30"), ValidationError);
    CHECK_THROWS_AS((void)parse_iso_date("20130704"), ValidationError);
    CHECK_THROWS_AS((void)parse_iso_date("2013-07-04T00"), ValidationError);
    CHECK(parse_iso_date("2016-02-29") == CivilDate{2016, 2, 29});
}

TEST_CASE("month-day windows") {
    CHECK(month_day_in_window({7, 15}, {7, 1}, {8, 31}));
    CHECK(month_day_in_window({7, 1}, {7, 1}, {8, 31}));
    CHECK(month_day_in_window({8, 31}, {7, 1}, {8, 31}));
    CHECK_FALSE(month_day_in_window({6, 30}, {7, 1}, {8, 31}));
    CHECK_FALSE(month_day_in_window({9, 1}, {7, 1}, {8, 31}));
    // wrap-around window
    CHECK(month_day_in_window({1, 5}, {12, 15}, {1, 15}));
    CHECK(month_day_in_window({12, 20}, {12, 15}, {1, 15}));
    CHECK_FALSE(month_day_in_window({6, 1}, {12, 15}, {1, 15}));

    CHECK(is_valid_month_day({2, 29}));
    CHECK_FALSE(is_valid_month_day({2, 30}));
    CHECK_FALSE(is_valid_month_day({13, 1}));
    CHECK_FALSE(is_valid_month_day({4, 31}));
}
