#pragma once

#include <Eigen/Dense>

namespace weekfx::sf {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
/// Series / continued-fraction evaluation, relative accuracy ~1e-14.
[[nodiscard]] double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
[[nodiscard]] double regularized_gamma_q(double a, double x);

/// Regularized incomplete beta I_x(a, b), a,b > 0, x in [0,1].
[[nodiscard]] double regularized_beta(double x, double a, double b);

/// Upper-tail probability of the chi-square distribution with df degrees of
/// freedom: P(X > x).
[[nodiscard]] double chi2_upper_tail(double x, double df);

/// Inverse of the chi-square upper tail: the x with P(X > x) = alpha.
[[nodiscard]] double chi2_upper_inverse(double df, double alpha);

[[nodiscard]] double normal_pdf(double x);
[[nodiscard]] double normal_cdf(double x);

/// Two-sided p-value of a Student-t statistic with df degrees of freedom.
[[nodiscard]] double student_t_two_sided_p(double t, double df);

/// Upper-tail probability of the F distribution: P(F > f), f >= 0.
[[nodiscard]] double f_upper_tail(double f, double df1, double df2);

/// CDF of the studentized range distribution with k groups and df error
/// degrees of freedom, evaluated by Gauss-Legendre quadrature.
[[nodiscard]] double studentized_range_cdf(double q, int k, double df);

/// Upper tail P(Q > q) of the studentized range distribution.
[[nodiscard]] double studentized_range_upper_tail(double q, int k, double df);

/// Gauss-Legendre nodes and weights on [a, b].
struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};
[[nodiscard]] QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace weekfx::sf
