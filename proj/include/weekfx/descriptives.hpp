#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "weekfx/series.hpp"

namespace weekfx {

/// Summary moments of one value sequence. Dispersion uses the sample
/// (n-1) convention; skewness and kurtosis are the bias-adjusted sample
/// estimators, kurtosis reported as excess. When the variance is zero the
/// shape moments are undefined: NaN with `shape_defined` cleared.
struct MomentsReport {
    std::int64_t n = 0;
    double min = 0.0;
    double max = 0.0;
    double sum = 0.0;
    double mean = 0.0;
    double std_dev = 0.0;
    double std_err = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;  ///< excess kurtosis
    bool shape_defined = true;
};

/// Needs n >= 2; throws ValidationError otherwise.
[[nodiscard]] MomentsReport moments(const Eigen::VectorXd& values);

/// Policy for ratio days whose denominator count is zero.
enum class RatioPolicy {
    zero_fill,  ///< ratio 0 on zero-denominator days (default)
    skip,       ///< drop zero-denominator days from the output
};

struct RatioSeries {
    Eigen::VectorXd values;
    std::int64_t zero_denominator_days = 0;  ///< days affected by the policy
};

/// Per-day ratio numerator/denominator of two stored categories.
[[nodiscard]] RatioSeries ratio_daily(const DailyEventSeries& series, EventCategory numerator,
                                      EventCategory denominator,
                                      RatioPolicy policy = RatioPolicy::zero_fill);

/// Chi-square test of weekday uniformity for one category's totals.
struct Chi2Report {
    double statistic = 0.0;
    int df = 6;
    double p_value = 1.0;
    double significance_level = 0.05;
    double critical_value = 0.0;
    bool reject_uniformity = false;
    bool weighted = false;           ///< expected counts weighted by weekday occurrences
    bool low_expected_warning = false;  ///< some expected cell < 1
    std::array<double, 7> expected{};
    std::array<std::int64_t, 7> observed{};
};

/// Unweighted (default): expected[k] = total / 7. Weighted: expected[k]
/// proportional to the number of times weekday k occurs in the window.
/// `significance_level` is the upper-tail probability of the critical value.
[[nodiscard]] Chi2Report chi2_uniform(const WeekdaySummary& summary, bool weighted = false,
                                      double significance_level = 0.05);

/// One-sided periodogram at the Fourier frequencies j/n, j = 1..floor(n/2).
/// Powers carry the two-sided mass of each frequency, so their sum equals
/// the population variance of the input.
struct Periodogram {
    Eigen::VectorXd frequencies;
    Eigen::VectorXd powers;
    double peak_frequency = 0.0;
    double peak_power = 0.0;

    [[nodiscard]] double total_power() const { return powers.sum(); }
};

/// Needs n >= 16 contiguous observations; the mean is removed before the
/// transform.
[[nodiscard]] Periodogram periodogram(const Eigen::VectorXd& values);
[[nodiscard]] Periodogram periodogram(const DailyEventSeries& series, EventCategory c);

}  // namespace weekfx
