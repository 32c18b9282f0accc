#include "weekfx/distfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "weekfx/errors.hpp"
#include "weekfx/special_functions.hpp"

namespace weekfx {

namespace {

// Filliben plotting positions m_1 .. m_n (uniform order-statistic medians).
Eigen::VectorXd filliben_positions(Eigen::Index n) {
    Eigen::VectorXd m(n);
    m[n - 1] = std::pow(0.5, 1.0 / static_cast<double>(n));
    m[0] = 1.0 - m[n - 1];
    for (Eigen::Index i = 2; i < n; ++i) {
        m[i - 1] = (static_cast<double>(i) - 0.3175) / (static_cast<double>(n) + 0.365);
    }
    return m;
}

double pearson(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const Eigen::ArrayXd da = a.array() - a.mean();
    const Eigen::ArrayXd db = b.array() - b.mean();
    const double denom = std::sqrt(da.square().sum() * db.square().sum());
    if (denom == 0.0) {
        throw NumericError("correlation undefined: zero variance");
    }
    return (da * db).sum() / denom;
}

void check_positive_sample(const Eigen::VectorXd& sample, const char* op) {
    if (sample.size() < 5) {
        throw ValidationError(std::string(op) + ": need a sample of at least 5 values");
    }
    if ((sample.array() <= 0.0).any()) {
        throw ValidationError(std::string(op) + ": sample values must be positive");
    }
}

}  // namespace

PpccCurve weibull_ppcc(const Eigen::VectorXd& sample, int grid_size, double shape_lo,
                       double shape_hi) {
    check_positive_sample(sample, "weibull_ppcc");
    if (grid_size < 2 || shape_lo <= 0.0 || shape_hi <= shape_lo) {
        throw ValidationError("weibull_ppcc: bad shape grid");
    }
    if (sample.minCoeff() == sample.maxCoeff()) {
        throw NumericError("weibull_ppcc: degenerate sample (all values equal)");
    }

    Eigen::VectorXd sorted = sample;
    std::sort(sorted.begin(), sorted.end());
    const Eigen::VectorXd m = filliben_positions(sorted.size());
    // -log(1 - m) is the unit-exponential quantile; Weibull(shape c) scales
    // it by the exponent 1/c.
    const Eigen::ArrayXd base = (-(1.0 - m.array()).log());

    PpccCurve curve;
    curve.shapes.resize(grid_size);
    curve.ppcc.resize(grid_size);
    const double log_lo = std::log(shape_lo);
    const double step = (std::log(shape_hi) - log_lo) / (grid_size - 1);
    curve.best_ppcc = -2.0;
    for (int g = 0; g < grid_size; ++g) {
        const double shape = std::exp(log_lo + g * step);
        const Eigen::VectorXd quantiles = base.pow(1.0 / shape).matrix();
        const double r = pearson(sorted, quantiles);
        curve.shapes[g] = shape;
        curve.ppcc[g] = r;
        if (r > curve.best_ppcc) {
            curve.best_ppcc = r;
            curve.best_shape = shape;
        }
    }
    return curve;
}

double weibull_profile_loglik(const Eigen::VectorXd& sample, double shape) {
    const double n = static_cast<double>(sample.size());
    const Eigen::ArrayXd logs = sample.array().log();
    const double s_c = sample.array().pow(shape).sum();
    return n * std::log(shape) + (shape - 1.0) * logs.sum() - n * std::log(s_c / n) - n;
}

double weibull_profile_loglik_deriv(const Eigen::VectorXd& sample, double shape) {
    const double n = static_cast<double>(sample.size());
    const Eigen::ArrayXd logs = sample.array().log();
    const Eigen::ArrayXd powers = sample.array().pow(shape);
    const double s_c = powers.sum();
    const double s_c_log = (powers * logs).sum();
    return n / shape + logs.sum() - n * s_c_log / s_c;
}

FitReport weibull_mle(const Eigen::VectorXd& sample) {
    check_positive_sample(sample, "weibull_mle");
    if (sample.minCoeff() == sample.maxCoeff()) {
        throw NumericError("weibull_mle: degenerate sample (all values equal)");
    }

    // Normalize by the geometric mean; the profile equation is invariant
    // under scaling and x^shape stays well bounded.
    const double log_gm = sample.array().log().mean();
    const Eigen::VectorXd y = (sample.array() / std::exp(log_gm)).matrix();

    const auto g = [&y](double c) { return weibull_profile_loglik_deriv(y, c); };

    // g is decreasing in the shape; bracket a sign change on a log grid.
    double lo = 1e-3, hi = 1e-3;
    double g_lo = g(lo);
    bool bracketed = false;
    for (int i = 0; i < 64; ++i) {
        hi = lo * 2.0;
        const double g_hi = g(hi);
        if ((g_lo > 0.0) != (g_hi > 0.0)) {
            bracketed = true;
            break;
        }
        lo = hi;
        g_lo = g_hi;
        if (hi > 1e6) break;
    }
    if (!bracketed) {
        throw NumericError(
            "weibull_mle: could not bracket the profile-likelihood root in [1e-3, 1e6]");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-10 * std::max(1.0, lo); ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((g(mid) > 0.0) == (g_lo > 0.0)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double shape = 0.5 * (lo + hi);
    const double scale_y = std::pow(y.array().pow(shape).mean(), 1.0 / shape);

    FitReport fit;
    fit.family = FitReport::Family::weibull;
    fit.shape = shape;
    fit.scale = scale_y * std::exp(log_gm);
    const double n = static_cast<double>(sample.size());
    fit.log_likelihood = n * std::log(shape) - n * shape * std::log(fit.scale) +
                         (shape - 1.0) * sample.array().log().sum() -
                         (sample.array() / fit.scale).pow(shape).sum();
    return fit;
}

FitReport exp_decay_fit(const Eigen::VectorXd& weekday_profile) {
    if (weekday_profile.size() != 7) {
        throw ValidationError("exp_decay_fit: expected a 7-cell weekday profile");
    }
    std::vector<double> ks, logs;
    for (int k = 0; k < 7; ++k) {
        const double v = weekday_profile[k];
        if (v < 0.0) throw ValidationError("exp_decay_fit: negative cell");
        if (v > 0.0) {
            ks.push_back(static_cast<double>(k));
            logs.push_back(std::log(v));
        }
    }
    if (ks.size() < 3) {
        throw ValidationError("exp_decay_fit: need at least 3 positive cells");
    }
    const Eigen::Map<const Eigen::VectorXd> x(ks.data(), static_cast<Eigen::Index>(ks.size()));
    const Eigen::Map<const Eigen::VectorXd> z(logs.data(), static_cast<Eigen::Index>(logs.size()));

    const double x_mean = x.mean();
    const double z_mean = z.mean();
    const Eigen::ArrayXd dx = x.array() - x_mean;
    const Eigen::ArrayXd dz = z.array() - z_mean;
    const double sxx = dx.square().sum();
    const double slope = (dx * dz).sum() / sxx;
    const double intercept = z_mean - slope * x_mean;

    const Eigen::ArrayXd fitted = intercept + slope * x.array();
    const double ss_res = (z.array() - fitted).square().sum();
    const double ss_tot = dz.square().sum();

    FitReport fit;
    fit.family = FitReport::Family::exponential_decay;
    fit.amplitude = std::exp(intercept);
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    if (slope < 0.0) {
        fit.relaxation_time = -1.0 / slope;
    } else {
        fit.relaxation_time = std::numeric_limits<double>::infinity();
        fit.non_decaying = true;
    }
    return fit;
}

FitReport exp_decay_fit(const WeekdaySummary& summary) {
    Eigen::VectorXd profile(7);
    for (int k = 0; k < 7; ++k) profile[k] = static_cast<double>(summary.totals[k]);
    return exp_decay_fit(profile);
}

double TukeyReport::difference(int a, int b) const {
    if (a == b) return 0.0;
    const TukeyPair& p = pair(a, b);
    return p.day_a == a ? p.mean_difference : -p.mean_difference;
}

const TukeyPair& TukeyReport::pair(int a, int b) const {
    for (const TukeyPair& p : pairs) {
        if ((p.day_a == a && p.day_b == b) || (p.day_a == b && p.day_b == a)) return p;
    }
    throw ValidationError("tukey: no such weekday pair");
}

TukeyReport tukey_pairwise(const std::array<Eigen::VectorXd, 7>& groups) {
    std::int64_t total_n = 0;
    for (const auto& group : groups) {
        if (group.size() < 2) {
            throw ValidationError("tukey_pairwise: every weekday group needs at least 2 values");
        }
        total_n += group.size();
    }

    TukeyReport report;
    report.df_within = total_n - 7;
    std::array<double, 7> means{};
    double ss_within = 0.0;
    for (int k = 0; k < 7; ++k) {
        means[k] = groups[k].mean();
        ss_within += (groups[k].array() - means[k]).square().sum();
    }
    report.ms_within = ss_within / static_cast<double>(report.df_within);
    if (report.ms_within <= 0.0) {
        throw NumericError("tukey_pairwise: zero within-group variance");
    }

    for (int a = 0; a < 7; ++a) {
        for (int b = a + 1; b < 7; ++b) {
            TukeyPair p;
            p.day_a = a;
            p.day_b = b;
            p.mean_difference = means[a] - means[b];
            const double inv_n = 1.0 / static_cast<double>(groups[a].size()) +
                                 1.0 / static_cast<double>(groups[b].size());
            const double se = std::sqrt(report.ms_within * inv_n / 2.0);
            p.q_statistic = std::fabs(p.mean_difference) / se;
            p.p_value = sf::studentized_range_upper_tail(p.q_statistic, 7,
                                                         static_cast<double>(report.df_within));
            report.pairs.push_back(p);
        }
    }
    return report;
}

std::array<Eigen::VectorXd, 7> weekday_groups(const DailyEventSeries& series, EventCategory c) {
    std::array<std::vector<double>, 7> buckets;
    for (std::size_t t = 0; t < series.size(); ++t) {
        buckets[series.weekday_of_index(t)].push_back(
            static_cast<double>(series.day(t).of(c)));
    }
    std::array<Eigen::VectorXd, 7> groups;
    for (int k = 0; k < 7; ++k) {
        groups[k] = Eigen::Map<const Eigen::VectorXd>(
            buckets[k].data(), static_cast<Eigen::Index>(buckets[k].size()));
    }
    return groups;
}

std::string ppcc_to_csv(const PpccCurve& curve) {
    std::ostringstream out;
    out << "shape,ppcc\n";
    out.precision(12);
    for (Eigen::Index i = 0; i < curve.shapes.size(); ++i) {
        out << curve.shapes[i] << ',' << curve.ppcc[i] << '\n';
    }
    return out.str();
}

}  // namespace weekfx
