#include "weekfx/descriptives.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "weekfx/errors.hpp"
#include "weekfx/special_functions.hpp"

namespace weekfx {

MomentsReport moments(const Eigen::VectorXd& values) {
    const Eigen::Index n = values.size();
    if (n < 2) {
        throw ValidationError("moments: need at least 2 values");
    }
    MomentsReport r;
    r.n = n;
    r.min = values.minCoeff();
    r.max = values.maxCoeff();
    r.sum = values.sum();
    r.mean = r.sum / static_cast<double>(n);

    const Eigen::ArrayXd centered = values.array() - r.mean;
    const double m2 = centered.square().mean();
    const double m3 = centered.cube().mean();
    const double m4 = centered.square().square().mean();

    const double nd = static_cast<double>(n);
    r.std_dev = std::sqrt(m2 * nd / (nd - 1.0));
    r.std_err = r.std_dev / std::sqrt(nd);

    if (m2 <= 0.0 || n < 4) {
        r.skewness = std::numeric_limits<double>::quiet_NaN();
        r.kurtosis = std::numeric_limits<double>::quiet_NaN();
        r.shape_defined = false;
        return r;
    }
    // Bias-adjusted sample skewness and excess kurtosis.
    const double g1 = m3 / std::pow(m2, 1.5);
    r.skewness = std::sqrt(nd * (nd - 1.0)) / (nd - 2.0) * g1;
    const double g2 = m4 / (m2 * m2) - 3.0;
    r.kurtosis = (nd - 1.0) / ((nd - 2.0) * (nd - 3.0)) * ((nd + 1.0) * g2 + 6.0);
    return r;
}

RatioSeries ratio_daily(const DailyEventSeries& series, EventCategory numerator,
                        EventCategory denominator, RatioPolicy policy) {
    RatioSeries out;
    std::vector<double> kept;
    kept.reserve(series.size());
    for (std::size_t t = 0; t < series.size(); ++t) {
        const double num = static_cast<double>(series.day(t).of(numerator));
        const double den = static_cast<double>(series.day(t).of(denominator));
        if (den == 0.0) {
            ++out.zero_denominator_days;
            if (policy == RatioPolicy::zero_fill) kept.push_back(0.0);
        } else {
            kept.push_back(num / den);
        }
    }
    out.values = Eigen::Map<const Eigen::VectorXd>(kept.data(),
                                                   static_cast<Eigen::Index>(kept.size()));
    return out;
}

Chi2Report chi2_uniform(const WeekdaySummary& summary, bool weighted,
                        double significance_level) {
    std::int64_t total = 0;
    std::int64_t days = 0;
    for (int k = 0; k < 7; ++k) {
        total += summary.totals[k];
        days += summary.occurrences[k];
    }
    if (total <= 0) {
        throw ValidationError("chi2_uniform: category total must be positive");
    }
    if (significance_level <= 0.0 || significance_level >= 1.0) {
        throw ValidationError("chi2_uniform: significance level must lie in (0, 1)");
    }

    Chi2Report r;
    r.weighted = weighted;
    r.significance_level = significance_level;
    r.observed = summary.totals;
    double statistic = 0.0;
    for (int k = 0; k < 7; ++k) {
        const double expected =
            weighted ? static_cast<double>(total) * static_cast<double>(summary.occurrences[k]) /
                           static_cast<double>(days)
                     : static_cast<double>(total) / 7.0;
        r.expected[k] = expected;
        if (expected < 1.0) r.low_expected_warning = true;
        const double diff = static_cast<double>(summary.totals[k]) - expected;
        statistic += diff * diff / expected;
    }
    r.statistic = statistic;
    r.df = 6;
    r.p_value = sf::chi2_upper_tail(statistic, r.df);
    r.critical_value = sf::chi2_upper_inverse(r.df, significance_level);
    r.reject_uniformity = statistic > r.critical_value;
    return r;
}

Periodogram periodogram(const Eigen::VectorXd& values) {
    const Eigen::Index n = values.size();
    if (n < 16) {
        throw ValidationError("periodogram: need at least 16 observations");
    }
    const Eigen::ArrayXd x = values.array() - values.mean();
    const Eigen::Index m = n / 2;

    Periodogram p;
    p.frequencies.resize(m);
    p.powers.resize(m);
    const double nd = static_cast<double>(n);
    const Eigen::ArrayXd t = Eigen::ArrayXd::LinSpaced(n, 0.0, nd - 1.0);
    for (Eigen::Index j = 1; j <= m; ++j) {
        const double freq = static_cast<double>(j) / nd;
        const Eigen::ArrayXd phase = 2.0 * std::numbers::pi * freq * t;
        const double re = (x * phase.cos()).sum() / nd;
        const double im = (x * phase.sin()).sum() / nd;
        // Interior bins carry the conjugate frequency's mass as well; the
        // Nyquist bin (even n) is its own conjugate.
        const bool nyquist = (2 * j == n);
        p.frequencies[j - 1] = freq;
        p.powers[j - 1] = (nyquist ? 1.0 : 2.0) * (re * re + im * im);
    }
    Eigen::Index peak = 0;
    p.peak_power = p.powers.maxCoeff(&peak);
    p.peak_frequency = p.frequencies[peak];
    return p;
}

Periodogram periodogram(const DailyEventSeries& series, EventCategory c) {
    return periodogram(category_values(series, c));
}

}  // namespace weekfx
