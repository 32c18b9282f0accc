#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "weekfx/calendar.hpp"

namespace weekfx {

/// The five stored event categories. Ratio series (accepted/submitted, ...)
/// are always computed on the fly, never stored.
enum class EventCategory { submitted, accepted, rejected, desk_rejected, withdrawn };

inline constexpr std::array<EventCategory, 5> kAllCategories = {
    EventCategory::submitted, EventCategory::accepted, EventCategory::rejected,
    EventCategory::desk_rejected, EventCategory::withdrawn};

[[nodiscard]] std::string_view category_name(EventCategory c);
[[nodiscard]] EventCategory parse_category(std::string_view name);

/// Per-day event counts. Invariants (checked on series construction):
/// all fields >= 0, submitted == accepted + rejected + withdrawn, and
/// desk_rejected <= rejected (desk rejections are a subset of rejections).
struct DayCounts {
    std::int64_t submitted = 0;
    std::int64_t accepted = 0;
    std::int64_t rejected = 0;
    std::int64_t desk_rejected = 0;
    std::int64_t withdrawn = 0;

    [[nodiscard]] std::int64_t of(EventCategory c) const;
    bool operator==(const DayCounts&) const = default;
};

/// One dated day of counts; the element type of non-contiguous record sets.
struct DayRecord {
    CivilDate date;
    DayCounts counts;
};

/// The output of a seasonal filter: day records that are generally NOT
/// contiguous. Only histogram-style aggregation accepts this type; spectral
/// and regression operations require a DailyEventSeries.
using DayRecordSet = std::vector<DayRecord>;

/// A contiguous, date-indexed daily count series. Day t is start_date() + t.
/// Immutable after construction; all members are accessors.
class DailyEventSeries {
public:
    /// Validates every per-day invariant; throws ValidationError naming the
    /// first offending date otherwise.
    DailyEventSeries(CivilDate start_date, std::vector<DayCounts> counts);

    [[nodiscard]] const CivilDate& start_date() const { return start_date_; }
    [[nodiscard]] CivilDate end_date() const {
        return add_days(start_date_, static_cast<std::int64_t>(counts_.size()) - 1);
    }
    [[nodiscard]] std::size_t size() const { return counts_.size(); }
    [[nodiscard]] const DayCounts& day(std::size_t t) const { return counts_[t]; }
    [[nodiscard]] CivilDate date_of(std::size_t t) const {
        return add_days(start_date_, static_cast<std::int64_t>(t));
    }
    [[nodiscard]] int weekday_of_index(std::size_t t) const {
        return (first_weekday_ + static_cast<int>(t % 7)) % 7;
    }
    [[nodiscard]] const std::vector<DayCounts>& days() const { return counts_; }

private:
    CivilDate start_date_;
    int first_weekday_;
    std::vector<DayCounts> counts_;
};

/// Per-weekday totals, calendar occurrence counts, and means for one
/// category, indexed Sunday = 0 .. Saturday = 6.
struct WeekdaySummary {
    EventCategory category = EventCategory::submitted;
    std::array<std::int64_t, 7> totals{};
    std::array<std::int64_t, 7> occurrences{};
    Eigen::Matrix<double, 7, 1> means = Eigen::Matrix<double, 7, 1>::Zero();

    /// Weekday index attaining the largest total (smallest index on ties).
    [[nodiscard]] int mode_weekday() const;
};

/// Contiguous sub-series over [from, to], counts unchanged.
/// Throws ValidationError when the bounds leave the series window.
[[nodiscard]] DailyEventSeries slice_window(const DailyEventSeries& series,
                                            const CivilDate& from, const CivilDate& to);

/// Selects the day records whose month-day falls inside any of the given
/// inclusive windows, across all years of the series. The result keeps
/// calendar labels but is not contiguous.
[[nodiscard]] DayRecordSet seasonal_filter(
    const DailyEventSeries& series,
    std::span<const std::pair<MonthDay, MonthDay>> windows);

[[nodiscard]] WeekdaySummary weekday_totals(const DailyEventSeries& series, EventCategory c);
[[nodiscard]] WeekdaySummary weekday_totals(const DayRecordSet& records, EventCategory c);

/// Daily counts of one category as a dense vector (for moments, spectra,
/// regression design responses).
[[nodiscard]] Eigen::VectorXd category_values(const DailyEventSeries& series, EventCategory c);

/// Splits a series into its calendar years (a year present only partially is
/// returned as the partial slice). Pairs of (year, sub-series).
[[nodiscard]] std::vector<std::pair<int, DailyEventSeries>> split_by_year(
    const DailyEventSeries& series);

}  // namespace weekfx
