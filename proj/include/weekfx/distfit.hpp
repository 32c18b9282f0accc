#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "weekfx/series.hpp"

namespace weekfx {

/// Probability-plot correlation coefficient curve over a Weibull shape grid.
struct PpccCurve {
    Eigen::VectorXd shapes;
    Eigen::VectorXd ppcc;
    double best_shape = 1.0;
    double best_ppcc = 0.0;
};

/// PPCC of the sorted sample against Weibull quantiles at Filliben plotting
/// positions, maximized over a log-spaced shape grid (default 200 points on
/// [0.1, 10]). Sample values must be positive, size >= 5.
[[nodiscard]] PpccCurve weibull_ppcc(const Eigen::VectorXd& sample, int grid_size = 200,
                                     double shape_lo = 0.1, double shape_hi = 10.0);

struct FitReport {
    enum class Family { weibull, exponential_decay };
    Family family = Family::weibull;
    // Weibull parameters.
    double shape = 0.0;
    double scale = 0.0;
    double log_likelihood = 0.0;
    // Exponential-decay parameters: value(k) ~ amplitude * exp(-k / relaxation_time).
    double amplitude = 0.0;
    double relaxation_time = 0.0;
    double r_squared = 0.0;
    bool non_decaying = false;  ///< log-linear slope was not negative
};

/// Maximum-likelihood Weibull fit. The shape solves the profile-likelihood
/// equation by bracketed root-finding (|step| < 1e-10); the scale then
/// follows in closed form. Sample values must be positive, size >= 5.
[[nodiscard]] FitReport weibull_mle(const Eigen::VectorXd& sample);

/// Profile log-likelihood of the Weibull shape (scale maximized out) and its
/// analytic derivative. Exposed for diagnostics and derivative checks.
[[nodiscard]] double weibull_profile_loglik(const Eigen::VectorXd& sample, double shape);
[[nodiscard]] double weibull_profile_loglik_deriv(const Eigen::VectorXd& sample, double shape);

/// Least-squares fit of ln(profile[k]) against k = 0..6. Only positive cells
/// enter the fit (at least 3 required). relaxation_time = -1/slope; a
/// non-negative slope is reported as a flagged non-decaying fit with
/// infinite relaxation time.
[[nodiscard]] FitReport exp_decay_fit(const Eigen::VectorXd& weekday_profile);
[[nodiscard]] FitReport exp_decay_fit(const WeekdaySummary& summary);

/// Tukey HSD pairwise comparison of the 7 weekday groups.
struct TukeyPair {
    int day_a = 0;
    int day_b = 0;
    double mean_difference = 0.0;  ///< mean(day_a) - mean(day_b)
    double q_statistic = 0.0;      ///< studentized range statistic
    double p_value = 1.0;
};

struct TukeyReport {
    std::vector<TukeyPair> pairs;  ///< the 21 pairs with day_a < day_b
    double ms_within = 0.0;
    std::int64_t df_within = 0;

    /// Signed difference mean(a) - mean(b); antisymmetric by construction.
    [[nodiscard]] double difference(int a, int b) const;
    [[nodiscard]] const TukeyPair& pair(int a, int b) const;
};

/// One-way layout over the 7 weekday groups of daily counts; studentized
/// range p-values by numerical integration with k = 7.
[[nodiscard]] TukeyReport tukey_pairwise(const std::array<Eigen::VectorXd, 7>& groups);

/// Splits a series into its 7 weekday groups of daily counts.
[[nodiscard]] std::array<Eigen::VectorXd, 7> weekday_groups(const DailyEventSeries& series,
                                                            EventCategory c);

/// Writes a PPCC curve as `shape,ppcc` CSV text.
[[nodiscard]] std::string ppcc_to_csv(const PpccCurve& curve);

}  // namespace weekfx
