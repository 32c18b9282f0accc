#pragma once

#include <Eigen/Dense>
#include <string>

#include "weekfx/series.hpp"

namespace weekfx {

using Matrix7d = Eigen::Matrix<double, 7, 7>;
using Vector7d = Eigen::Matrix<double, 7, 1>;

/// Weekday indicator matrix: entry (t, k) is 1 iff day t falls on weekday k.
/// Every row sums to 1; column k sums to the occurrence count of weekday k.
[[nodiscard]] Eigen::MatrixXd build_design(const DailyEventSeries& series);
[[nodiscard]] Eigen::MatrixXd build_design(Eigen::Index n_days, int first_weekday);

struct OlsResult {
    Eigen::VectorXd beta;
    Eigen::VectorXd residuals;
    double rss = 0.0;     ///< residual sum of squares
    double sigma2 = 0.0;  ///< rss / (rows - cols)
    Eigen::MatrixXd covariance;
};

/// Least squares through a column-pivoted QR factorization (the normal
/// equations are never inverted explicitly). Throws NumericError naming the
/// dependent columns when X is rank deficient, ValidationError when
/// rows < cols.
[[nodiscard]] OlsResult ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

/// Pairwise weekday-effect coefficient matrix. Row k holds the regression
/// coefficients of the series re-centered on weekday k's mean against the
/// full 7-dummy design (no intercept): values(k, j) is weekday j's
/// coefficient. Zero diagonal, antisymmetric.
struct BetaMatrix {
    EventCategory category = EventCategory::submitted;
    Matrix7d values = Matrix7d::Zero();

    /// Table-style CSV: header row Sun..Sat, one row per reference day k,
    /// coefficients rendered with 4 decimals.
    [[nodiscard]] std::string to_csv() const;
};

/// The seven per-reference-day dummy regressions of one category's daily
/// counts. Regressions run on the indicator design produced by
/// build_design; no intercept is included (the dummies span it).
[[nodiscard]] BetaMatrix strong_model(const DailyEventSeries& series, EventCategory c);

/// Strong model over raw daily values starting on `first_weekday`.
[[nodiscard]] Matrix7d strong_model_values(const Eigen::VectorXd& y, int first_weekday);

struct WeakModelResult {
    int day = 0;            ///< the single dummy's weekday
    double alpha0 = 0.0;    ///< intercept
    double alpha1 = 0.0;    ///< day-dummy coefficient
    double t_stat = 0.0;
    double p_value = 1.0;   ///< two-sided, Student-t with n-2 df
    double rss = 0.0;
};

/// Intercept + one weekday dummy.
[[nodiscard]] WeakModelResult weak_model(const DailyEventSeries& series, EventCategory c,
                                         int day);

/// Weak model over raw daily values starting on `first_weekday`.
[[nodiscard]] WeakModelResult weak_model_values(const Eigen::VectorXd& y, int first_weekday,
                                                int day);

enum class VarianceConvention {
    population,  ///< divide by n (default)
    sample,      ///< divide by n - 1
};

[[nodiscard]] double variance(const Eigen::VectorXd& values,
                              VarianceConvention convention = VarianceConvention::population);

/// Variance of one category's daily counts over [from, to].
[[nodiscard]] double interval_variance(
    const DailyEventSeries& series, EventCategory c, const CivilDate& from, const CivilDate& to,
    VarianceConvention convention = VarianceConvention::population);

}  // namespace weekfx
