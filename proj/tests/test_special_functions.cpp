#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "weekfx/errors.hpp"
#include "weekfx/rng.hpp"
#include "weekfx/special_functions.hpp"

using namespace weekfx;

namespace {

// Independent F upper-tail oracle: quadrature of the beta-kernel density
// that the F tail transforms into, with a square-root substitution removing
// the endpoint singularity. No continued fractions involved.
double f_upper_tail_quadrature(double f, double d1, double d2) {
    const double y_f = d2 / (d2 + d1 * f);
    const double a = d2 / 2.0, b = d1 / 2.0;
    const double log_b_const = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    const sf::QuadratureRule rule = sf::gauss_legendre(256, 0.0, 1.0);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        const double y = y_f * u * u;
        if (y <= 0.0 || y >= 1.0) continue;
        const double log_kernel = (a - 1.0) * std::log(y) + (b - 1.0) * std::log1p(-y);
        acc += rule.weights[i] * std::exp(log_kernel - log_b_const) * 2.0 * y_f * u;
    }
    return acc;
}

}  // namespace

TEST_CASE("regularized gamma basics") {
    CHECK(sf::regularized_gamma_p(3.0, 0.0) == 0.0);
    CHECK(sf::regularized_gamma_q(3.0, 0.0) == 1.0);
    for (double a : {0.5, 1.0, 3.0, 10.0, 120.0}) {
        for (double x : {0.1, 1.0, 5.0, 40.0, 200.0}) {
            const double p = sf::regularized_gamma_p(a, x);
            const double q = sf::regularized_gamma_q(a, x);
            CHECK(p + q == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
        }
    }
    // P(1, x) = 1 - exp(-x) in closed form.
    for (double x : {0.2, 1.0, 3.5, 10.0}) {
        CHECK(sf::regularized_gamma_p(1.0, x) ==
              doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-13));
    }
}

TEST_CASE("chi-square tail and inverse") {
    // df = 2 closed form: P(X > x) = exp(-x/2).
    for (double x : {0.5, 2.0, 7.5, 20.0}) {
        CHECK(sf::chi2_upper_tail(x, 2.0) == doctest::Approx(std::exp(-x / 2.0)).epsilon(1e-12));
    }
    CHECK(sf::chi2_upper_inverse(6.0, 0.005) == doctest::Approx(18.5476).epsilon(5e-5));
    CHECK(sf::chi2_upper_inverse(6.0, 0.05) == doctest::Approx(12.5916).epsilon(5e-5));
    // inverse round trip
    for (double df : {1.0, 6.0, 29.0, 250.0}) {
        for (double alpha : {0.9, 0.5, 0.05, 0.005, 1e-6}) {
            const double x = sf::chi2_upper_inverse(df, alpha);
            CHECK(sf::chi2_upper_tail(x, df) == doctest::Approx(alpha).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS((void)sf::chi2_upper_inverse(6.0, 0.0), ValidationError);
}

TEST_CASE("regularized beta spot identities") {
    for (double x : {0.05, 0.3, 0.77, 0.99}) {
        CHECK(sf::regularized_beta(x, 1.0, 1.0) == doctest::Approx(x).epsilon(1e-13));
        CHECK(sf::regularized_beta(x, 3.0, 1.0) ==
              doctest::Approx(std::pow(x, 3.0)).epsilon(1e-12));
        CHECK(sf::regularized_beta(x, 1.0, 4.5) ==
              doctest::Approx(1.0 - std::pow(1.0 - x, 4.5)).epsilon(1e-12));
        for (double a : {0.5, 2.0, 17.0}) {
            for (double b : {1.5, 8.0}) {
                CHECK(sf::regularized_beta(x, a, b) ==
                      doctest::Approx(1.0 - sf::regularized_beta(1.0 - x, b, a)).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("student t two-sided p against closed forms") {
    // df = 1 is Cauchy: p = 1 - (2/pi) atan(|t|).
    for (double t : {0.3, 1.0, 2.5, 12.0}) {
        CHECK(sf::student_t_two_sided_p(t, 1.0) ==
              doctest::Approx(1.0 - 2.0 / std::numbers::pi * std::atan(t)).epsilon(1e-12));
        // df = 2 closed form: p = 1 - t / sqrt(2 + t^2).
        CHECK(sf::student_t_two_sided_p(t, 2.0) ==
              doctest::Approx(1.0 - t / std::sqrt(2.0 + t * t)).epsilon(1e-12));
        CHECK(sf::student_t_two_sided_p(-t, 5.0) ==
              doctest::Approx(sf::student_t_two_sided_p(t, 5.0)).epsilon(1e-13));
    }
    CHECK(sf::student_t_two_sided_p(0.0, 7.0) == doctest::Approx(1.0));
    // large df approaches the normal two-sided p
    CHECK(sf::student_t_two_sided_p(1.959963985, 1e7) == doctest::Approx(0.05).epsilon(1e-4));
}

TEST_CASE("F upper tail matches a numerical-integration oracle at 50 points") {
    rng::Xoshiro256pp gen(424242);
    int checked = 0;
    while (checked < 50) {
        const double f = 0.05 + 8.0 * gen.uniform();
        const double d1 = 1.0 + static_cast<double>(gen.next() % 20);
        const double d2 = 3.0 + static_cast<double>(gen.next() % 400);
        const double via_beta = sf::f_upper_tail(f, d1, d2);
        const double via_quadrature = f_upper_tail_quadrature(f, d1, d2);
        REQUIRE(std::fabs(via_beta - via_quadrature) < 1e-6);
        ++checked;
    }
    CHECK(sf::f_upper_tail(0.0, 3.0, 10.0) == 1.0);
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const sf::QuadratureRule rule = sf::gauss_legendre(12, -1.0, 3.0);
    // degree <= 2n-1 polynomials are exact; try x^7 - 2x^3 + 1
    double acc = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        acc += rule.weights[i] * (std::pow(x, 7) - 2.0 * std::pow(x, 3) + 1.0);
    }
    const auto antiderivative = [](double x) {
        return std::pow(x, 8) / 8.0 - std::pow(x, 4) / 2.0 + x;
    };
    CHECK(acc == doctest::Approx(antiderivative(3.0) - antiderivative(-1.0)).epsilon(1e-12));
    CHECK(rule.weights.sum() == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("studentized range: k=2 reduces to a scaled t") {
    // For two groups the studentized range is sqrt(2)|t|, so
    // P(Q > q) = two-sided t p-value at q/sqrt(2).
    for (double df : {5.0, 30.0, 200.0}) {
        for (double q : {0.5, 1.5, 2.8, 4.0, 6.0}) {
            const double via_range = sf::studentized_range_upper_tail(q, 2, df);
            const double via_t = sf::student_t_two_sided_p(q / std::numbers::sqrt2, df);
            CHECK(via_range == doctest::Approx(via_t).epsilon(5e-7));
        }
    }
}

TEST_CASE("studentized range CDF against Monte Carlo (k=7)") {
    const int k = 7;
    const double df = 30.0;
    const int reps = 200000;
    rng::Xoshiro256pp gen(20240711);
    std::vector<double> q_samples(reps);
    for (int r = 0; r < reps; ++r) {
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < k; ++i) {
            const double z = gen.normal();
            lo = std::min(lo, z);
            hi = std::max(hi, z);
        }
        double chi2 = 0.0;
        for (int i = 0; i < static_cast<int>(df); ++i) {
            const double z = gen.normal();
            chi2 += z * z;
        }
        q_samples[r] = (hi - lo) / std::sqrt(chi2 / df);
    }
    for (double q : {3.0, 4.0, 4.5, 5.5}) {
        const double mc =
            static_cast<double>(std::count_if(q_samples.begin(), q_samples.end(),
                                              [q](double v) { return v <= q; })) /
            reps;
        const double cdf = sf::studentized_range_cdf(q, k, df);
        CHECK(std::fabs(cdf - mc) < 0.005);
    }
}

TEST_CASE("studentized range large-df limit") {
    // Classic 5% critical value for k = 7 at infinite df is about 4.17.
    const double p = sf::studentized_range_upper_tail(4.17, 7, 1e8);
    CHECK(p == doctest::Approx(0.05).epsilon(0.02));
    // monotone in q
    CHECK(sf::studentized_range_cdf(2.0, 7, 100.0) < sf::studentized_range_cdf(3.0, 7, 100.0));
    CHECK(sf::studentized_range_cdf(0.0, 7, 100.0) == 0.0);
}
