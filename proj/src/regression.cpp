#include "weekfx/regression.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "weekfx/errors.hpp"
#include "weekfx/special_functions.hpp"

namespace weekfx {

Eigen::MatrixXd build_design(const DailyEventSeries& series) {
    return build_design(static_cast<Eigen::Index>(series.size()),
                        series.weekday_of_index(0));
}

Eigen::MatrixXd build_design(Eigen::Index n_days, int first_weekday) {
    if (first_weekday < 0 || first_weekday > 6) {
        throw ValidationError("build_design: first weekday must lie in 0..6");
    }
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n_days, 7);
    for (Eigen::Index t = 0; t < n_days; ++t) {
        X(t, (first_weekday + t) % 7) = 1.0;
    }
    return X;
}

OlsResult ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    if (X.rows() != y.size()) {
        throw ValidationError("ols: X and y disagree on the number of observations");
    }
    if (X.rows() < X.cols()) {
        throw ValidationError("ols: fewer observations than regressors");
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < X.cols()) {
        // The pivot permutation pushes the dependent columns to the back.
        std::ostringstream msg;
        msg << "ols: design is rank deficient (rank " << qr.rank() << " of " << X.cols()
            << "); dependent column(s):";
        const auto& perm = qr.colsPermutation().indices();
        for (Eigen::Index i = qr.rank(); i < X.cols(); ++i) msg << ' ' << perm[i];
        throw NumericError(msg.str());
    }

    OlsResult r;
    r.beta = qr.solve(y);
    r.residuals = y - X * r.beta;
    r.rss = r.residuals.squaredNorm();
    const Eigen::Index dof = X.rows() - X.cols();
    r.sigma2 = dof > 0 ? r.rss / static_cast<double>(dof) : 0.0;
    // (X'X)^{-1} from the R factor: X P = Q R, so (X'X)^{-1} = P R^{-1} R^{-T} P'.
    const Eigen::MatrixXd R =
        qr.matrixR().topLeftCorner(X.cols(), X.cols()).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd Rinv =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(X.cols(), X.cols()));
    const Eigen::MatrixXd xtx_inv =
        qr.colsPermutation() * (Rinv * Rinv.transpose()) * qr.colsPermutation().transpose();
    r.covariance = r.sigma2 * xtx_inv;
    return r;
}

std::string BetaMatrix::to_csv() const {
    std::ostringstream out;
    out << "k";
    for (const char* name : kWeekdayNames) out << ',' << name;
    out << '\n';
    char buf[32];
    for (int k = 0; k < 7; ++k) {
        out << k;
        for (int j = 0; j < 7; ++j) {
            std::snprintf(buf, sizeof(buf), "%.4f", values(k, j));
            out << ',' << buf;
        }
        out << '\n';
    }
    return out.str();
}

Matrix7d strong_model_values(const Eigen::VectorXd& y, int first_weekday) {
    const Eigen::MatrixXd X = build_design(y.size(), first_weekday);
    // Per-weekday means of y, the re-centering references.
    Vector7d means = Vector7d::Zero();
    Vector7d occurrences = Vector7d::Zero();
    for (Eigen::Index t = 0; t < y.size(); ++t) {
        const int k = (first_weekday + t) % 7;
        means[k] += y[t];
        occurrences[k] += 1.0;
    }
    for (int k = 0; k < 7; ++k) {
        if (occurrences[k] == 0.0) {
            throw ValidationError("strong_model: some weekday never occurs in the window");
        }
        means[k] /= occurrences[k];
    }

    Matrix7d values;
    for (int k = 0; k < 7; ++k) {
        const Eigen::VectorXd dy = y.array() - means[k];
        values.row(k) = ols(X, dy).beta.transpose();
    }
    return values;
}

BetaMatrix strong_model(const DailyEventSeries& series, EventCategory c) {
    BetaMatrix beta;
    beta.category = c;
    beta.values = strong_model_values(category_values(series, c), series.weekday_of_index(0));
    return beta;
}

WeakModelResult weak_model_values(const Eigen::VectorXd& y, int first_weekday, int day) {
    if (day < 0 || day > 6) {
        throw ValidationError("weak_model: weekday index must lie in 0..6");
    }
    const Eigen::Index rows = y.size();
    Eigen::MatrixXd X = Eigen::MatrixXd::Ones(rows, 2);
    for (Eigen::Index t = 0; t < rows; ++t) {
        X(t, 1) = (first_weekday + t) % 7 == day ? 1.0 : 0.0;
    }
    const OlsResult fit = ols(X, y);

    WeakModelResult r;
    r.day = day;
    r.alpha0 = fit.beta[0];
    r.alpha1 = fit.beta[1];
    r.rss = fit.rss;
    const double se = std::sqrt(fit.covariance(1, 1));
    if (se > 0.0) {
        r.t_stat = r.alpha1 / se;
        r.p_value = sf::student_t_two_sided_p(r.t_stat, static_cast<double>(rows - 2));
    } else {
        r.t_stat = 0.0;
        r.p_value = 1.0;
    }
    return r;
}

WeakModelResult weak_model(const DailyEventSeries& series, EventCategory c, int day) {
    return weak_model_values(category_values(series, c), series.weekday_of_index(0), day);
}

double variance(const Eigen::VectorXd& values, VarianceConvention convention) {
    if (values.size() < 2) {
        throw ValidationError("variance: need at least 2 values");
    }
    const double ss = (values.array() - values.mean()).square().sum();
    const double denom = convention == VarianceConvention::population
                             ? static_cast<double>(values.size())
                             : static_cast<double>(values.size() - 1);
    return ss / denom;
}

double interval_variance(const DailyEventSeries& series, EventCategory c, const CivilDate& from,
                         const CivilDate& to, VarianceConvention convention) {
    const DailyEventSeries window = slice_window(series, from, to);
    if (window.size() < 2) {
        throw ValidationError("interval_variance: window must span at least 2 days");
    }
    return variance(category_values(window, c), convention);
}

}  // namespace weekfx
