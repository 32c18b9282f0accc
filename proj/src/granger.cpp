#include "weekfx/granger.hpp"

#include <cmath>
#include <sstream>

#include "weekfx/errors.hpp"
#include "weekfx/regression.hpp"
#include "weekfx/special_functions.hpp"

namespace weekfx {

namespace {

// Rows t = lags..n-1; columns: intercept, then `lags` own lags, then
// (optionally) `lags` cause lags.
Eigen::MatrixXd lag_design(const Eigen::VectorXd& effect, const Eigen::VectorXd& cause, int lags,
                           bool with_cause) {
    const Eigen::Index n_eff = effect.size() - lags;
    const Eigen::Index cols = 1 + (with_cause ? 2 * lags : lags);
    Eigen::MatrixXd X(n_eff, cols);
    X.col(0).setOnes();
    for (int lag = 1; lag <= lags; ++lag) {
        X.col(lag) = effect.segment(lags - lag, n_eff);
        if (with_cause) X.col(lags + lag) = cause.segment(lags - lag, n_eff);
    }
    return X;
}

}  // namespace

GrangerReport granger_test(const Eigen::VectorXd& effect, const Eigen::VectorXd& cause,
                           int lags) {
    if (lags < 1) {
        throw ValidationError("granger_test: lag order must be at least 1");
    }
    if (effect.size() != cause.size()) {
        throw ValidationError("granger_test: series lengths differ");
    }
    const Eigen::Index n = effect.size();
    if (n <= 3 * static_cast<Eigen::Index>(lags) + 5) {
        throw ValidationError("granger_test: series too short for lag order " +
                              std::to_string(lags));
    }

    const Eigen::Index n_eff = n - lags;
    const Eigen::VectorXd y = effect.tail(n_eff);
    const Eigen::MatrixXd Xu = lag_design(effect, cause, lags, true);
    const Eigen::MatrixXd Xr = lag_design(effect, cause, lags, false);

    const OlsResult unrestricted = ols(Xu, y);
    const OlsResult restricted = ols(Xr, y);

    GrangerReport r;
    r.lags = lags;
    r.n_restricted = static_cast<int>(n_eff);
    r.n_unrestricted = static_cast<int>(n_eff);
    r.rss_restricted = restricted.rss;
    r.rss_unrestricted = unrestricted.rss;
    r.df_num = lags;
    r.df_den = static_cast<int>(n_eff) - 2 * lags - 1;
    r.f_stat = ((restricted.rss - unrestricted.rss) / static_cast<double>(lags)) /
               (unrestricted.rss / static_cast<double>(r.df_den));
    if (r.f_stat < 0.0) r.f_stat = 0.0;  // guard tiny negative rounding
    r.p_value = sf::f_upper_tail(r.f_stat, r.df_num, r.df_den);

    // HC1 sandwich covariance of the unrestricted fit, Wald on the cause-lag
    // block.
    {
        const Eigen::Index k = Xu.cols();
        const Eigen::MatrixXd xtx = Xu.transpose() * Xu;
        const Eigen::MatrixXd xtx_inv = xtx.ldlt().solve(Eigen::MatrixXd::Identity(k, k));
        const Eigen::ArrayXd e2 = unrestricted.residuals.array().square();
        const Eigen::MatrixXd meat = Xu.transpose() * e2.matrix().asDiagonal() * Xu;
        const double hc1 = static_cast<double>(n_eff) / static_cast<double>(n_eff - k);
        const Eigen::MatrixXd sandwich = hc1 * xtx_inv * meat * xtx_inv;
        const Eigen::VectorXd b_cause = unrestricted.beta.segment(1 + lags, lags);
        const Eigen::MatrixXd v_cause = sandwich.block(1 + lags, 1 + lags, lags, lags);
        r.robust_wald_stat = b_cause.dot(v_cause.ldlt().solve(b_cause));
        r.robust_wald_p = sf::chi2_upper_tail(r.robust_wald_stat, lags);
    }

    r.significant_10pct = r.p_value < 0.10;
    r.significant_5pct = r.p_value < 0.05;
    return r;
}

std::vector<GrangerReport> granger_all_pairs(const DailyEventSeries& series, int lags) {
    const Eigen::VectorXd submitted = category_values(series, EventCategory::submitted);
    const Eigen::VectorXd accepted = category_values(series, EventCategory::accepted);
    const Eigen::VectorXd rejected = category_values(series, EventCategory::rejected);

    struct Pair {
        const Eigen::VectorXd* effect;
        const char* effect_name;
        const Eigen::VectorXd* cause;
        const char* cause_name;
    };
    const Pair pairs[6] = {
        {&accepted, "accepted", &submitted, "submitted"},
        {&submitted, "submitted", &accepted, "accepted"},
        {&rejected, "rejected", &submitted, "submitted"},
        {&submitted, "submitted", &rejected, "rejected"},
        {&rejected, "rejected", &accepted, "accepted"},
        {&accepted, "accepted", &rejected, "rejected"},
    };

    std::vector<GrangerReport> out;
    out.reserve(6);
    for (const Pair& p : pairs) {
        GrangerReport r = granger_test(*p.effect, *p.cause, lags);
        r.effect = p.effect_name;
        r.cause = p.cause_name;
        out.push_back(std::move(r));
    }
    return out;
}

std::string granger_to_csv(const std::vector<GrangerReport>& reports) {
    std::ostringstream out;
    out << "effect,cause,lags,f_stat,p_value,df_num,df_den,robust_wald_stat,robust_wald_p,stars\n";
    out.precision(6);
    out.setf(std::ios::fixed);
    for (const GrangerReport& r : reports) {
        out << r.effect << ',' << r.cause << ',' << r.lags << ',' << r.f_stat << ',' << r.p_value
            << ',' << r.df_num << ',' << r.df_den << ',' << r.robust_wald_stat << ','
            << r.robust_wald_p << ',' << r.stars() << '\n';
    }
    return out.str();
}

}  // namespace weekfx
