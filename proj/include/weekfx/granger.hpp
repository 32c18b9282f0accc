#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "weekfx/series.hpp"

namespace weekfx {

/// One directed Granger causality test: does `cause` improve the prediction
/// of `effect` beyond the effect's own lags?
struct GrangerReport {
    std::string cause;   ///< display label of the candidate cause series
    std::string effect;  ///< display label of the predicted series
    int lags = 0;
    double f_stat = 0.0;
    double p_value = 1.0;
    int df_num = 0;
    int df_den = 0;
    /// Both regressions are aligned on the same effective sample, so the two
    /// sizes coincide: length - lags.
    int n_restricted = 0;
    int n_unrestricted = 0;
    double rss_restricted = 0.0;
    double rss_unrestricted = 0.0;
    /// Heteroskedasticity-consistent (HC1) Wald test of the same joint
    /// restriction, chi-square with `lags` degrees of freedom.
    double robust_wald_stat = 0.0;
    double robust_wald_p = 1.0;
    bool significant_10pct = false;
    bool significant_5pct = false;

    /// Paper-style rendering: stars mark 10%-level-only significance.
    [[nodiscard]] std::string stars() const { return significant_10pct && !significant_5pct ? "***" : ""; }
};

/// F test of the joint nullity of the cause lags in
///   y_t = const + sum_i a_i y_{t-i} + sum_i b_i x_{t-i} + e_t.
/// Both the restricted and unrestricted regressions run on the same
/// effective sample (the first `lags` observations are dropped).
/// Requires lags >= 1 and length > 3*lags + 5.
[[nodiscard]] GrangerReport granger_test(const Eigen::VectorXd& effect,
                                         const Eigen::VectorXd& cause, int lags);

/// The six directed pairs among submitted / accepted / rejected, in the
/// fixed order accepted<-submitted, submitted<-accepted, rejected<-submitted,
/// submitted<-rejected, rejected<-accepted, accepted<-rejected.
[[nodiscard]] std::vector<GrangerReport> granger_all_pairs(const DailyEventSeries& series,
                                                           int lags = 7);

/// CSV rendering of a batch of reports (stable column order).
[[nodiscard]] std::string granger_to_csv(const std::vector<GrangerReport>& reports);

}  // namespace weekfx
