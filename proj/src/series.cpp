#include "weekfx/series.hpp"

#include <algorithm>

#include "weekfx/errors.hpp"

namespace weekfx {

std::string_view category_name(EventCategory c) {
    switch (c) {
        case EventCategory::submitted: return "submitted";
        case EventCategory::accepted: return "accepted";
        case EventCategory::rejected: return "rejected";
        case EventCategory::desk_rejected: return "desk_rejected";
        case EventCategory::withdrawn: return "withdrawn";
    }
    return "?";
}

EventCategory parse_category(std::string_view name) {
    for (EventCategory c : kAllCategories) {
        if (category_name(c) == name) return c;
    }
    throw ValidationError("unknown event category: '" + std::string(name) + "'");
}

std::int64_t DayCounts::of(EventCategory c) const {
    switch (c) {
        case EventCategory::submitted: return submitted;
        case EventCategory::accepted: return accepted;
        case EventCategory::rejected: return rejected;
        case EventCategory::desk_rejected: return desk_rejected;
        case EventCategory::withdrawn: return withdrawn;
    }
    return 0;
}

namespace {

void check_day(const CivilDate& date, const DayCounts& c) {
    const std::int64_t fields[5] = {c.submitted, c.accepted, c.rejected, c.desk_rejected,
                                    c.withdrawn};
    for (std::int64_t v : fields) {
        if (v < 0) {
            throw ValidationError("negative count on " + format_iso_date(date));
        }
    }
    if (c.submitted != c.accepted + c.rejected + c.withdrawn) {
        throw ValidationError("count identity violated on " + format_iso_date(date) +
                              ": submitted != accepted + rejected + withdrawn");
    }
    if (c.desk_rejected > c.rejected) {
        throw ValidationError("desk_rejected exceeds rejected on " + format_iso_date(date));
    }
}

}  // namespace

DailyEventSeries::DailyEventSeries(CivilDate start_date, std::vector<DayCounts> counts)
    : start_date_(start_date), first_weekday_(weekday_of(start_date)), counts_(std::move(counts)) {
    if (!is_valid_date(start_date_)) {
        throw ValidationError("invalid start date " + format_iso_date(start_date_));
    }
    if (counts_.empty()) {
        throw ValidationError("a daily series must contain at least one day");
    }
    for (std::size_t t = 0; t < counts_.size(); ++t) {
        check_day(date_of(t), counts_[t]);
    }
}

int WeekdaySummary::mode_weekday() const {
    return static_cast<int>(
        std::max_element(totals.begin(), totals.end()) - totals.begin());
}

DailyEventSeries slice_window(const DailyEventSeries& series, const CivilDate& from,
                              const CivilDate& to) {
    const std::int64_t lo = days_between(series.start_date(), from);
    const std::int64_t hi = days_between(series.start_date(), to);
    if (lo < 0 || hi >= static_cast<std::int64_t>(series.size()) || lo > hi) {
        throw ValidationError("window " + format_iso_date(from) + ".." + format_iso_date(to) +
                              " is outside the series " + format_iso_date(series.start_date()) +
                              ".." + format_iso_date(series.end_date()));
    }
    std::vector<DayCounts> sub(series.days().begin() + lo, series.days().begin() + hi + 1);
    return DailyEventSeries(from, std::move(sub));
}

DayRecordSet seasonal_filter(const DailyEventSeries& series,
                             std::span<const std::pair<MonthDay, MonthDay>> windows) {
    for (const auto& [from, to] : windows) {
        if (!is_valid_month_day(from) || !is_valid_month_day(to)) {
            throw ValidationError("invalid month-day window bound");
        }
    }
    DayRecordSet out;
    for (std::size_t t = 0; t < series.size(); ++t) {
        const CivilDate d = series.date_of(t);
        const MonthDay md{d.month, d.day};
        const bool selected = std::any_of(windows.begin(), windows.end(), [&](const auto& w) {
            return month_day_in_window(md, w.first, w.second);
        });
        if (selected) out.push_back(DayRecord{d, series.day(t)});
    }
    return out;
}

namespace {

WeekdaySummary finish_summary(WeekdaySummary s) {
    for (int k = 0; k < 7; ++k) {
        s.means[k] = s.occurrences[k] > 0
                         ? static_cast<double>(s.totals[k]) / static_cast<double>(s.occurrences[k])
                         : 0.0;
    }
    return s;
}

}  // namespace

WeekdaySummary weekday_totals(const DailyEventSeries& series, EventCategory c) {
    WeekdaySummary s;
    s.category = c;
    for (std::size_t t = 0; t < series.size(); ++t) {
        const int k = series.weekday_of_index(t);
        s.totals[k] += series.day(t).of(c);
        s.occurrences[k] += 1;
    }
    return finish_summary(s);
}

WeekdaySummary weekday_totals(const DayRecordSet& records, EventCategory c) {
    if (records.empty()) {
        throw ValidationError("weekday totals of an empty record set");
    }
    WeekdaySummary s;
    s.category = c;
    for (const DayRecord& r : records) {
        const int k = weekday_of(r.date);
        s.totals[k] += r.counts.of(c);
        s.occurrences[k] += 1;
    }
    return finish_summary(s);
}

Eigen::VectorXd category_values(const DailyEventSeries& series, EventCategory c) {
    Eigen::VectorXd y(static_cast<Eigen::Index>(series.size()));
    for (std::size_t t = 0; t < series.size(); ++t) {
        y[static_cast<Eigen::Index>(t)] = static_cast<double>(series.day(t).of(c));
    }
    return y;
}

std::vector<std::pair<int, DailyEventSeries>> split_by_year(const DailyEventSeries& series) {
    std::vector<std::pair<int, DailyEventSeries>> out;
    int year = series.start_date().year;
    const int last_year = series.end_date().year;
    for (; year <= last_year; ++year) {
        const CivilDate from = std::max(series.start_date(), CivilDate{year, 1, 1});
        const CivilDate to = std::min(series.end_date(), CivilDate{year, 12, 31});
        out.emplace_back(year, slice_window(series, from, to));
    }
    return out;
}

}  // namespace weekfx
