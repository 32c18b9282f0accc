#include "weekfx/rng.hpp"

#include <cmath>
#include <numbers>

#include "weekfx/errors.hpp"

namespace weekfx::rng {

std::int64_t Xoshiro256pp::poisson(double mean) {
    if (mean < 0.0 || !std::isfinite(mean)) {
        throw ValidationError("poisson: mean must be finite and nonnegative");
    }
    std::int64_t total = 0;
    while (mean > 30.0) {  // Poisson(a+b) = Poisson(a) + Poisson(b)
        total += poisson(30.0);
        mean -= 30.0;
    }
    if (mean == 0.0) return total;
    const double limit = std::exp(-mean);
    double product = 1.0;
    std::int64_t count = -1;
    do {
        product *= uniform();
        ++count;
    } while (product > limit);
    return total + count;
}

double Xoshiro256pp::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_normal_ = radius * std::sin(angle);
    has_cached_normal_ = true;
    return radius * std::cos(angle);
}

double Xoshiro256pp::exponential(double rate) {
    if (rate <= 0.0) throw ValidationError("exponential: rate must be positive");
    return -std::log1p(-uniform()) / rate;
}

double Xoshiro256pp::weibull(double shape, double scale) {
    if (shape <= 0.0 || scale <= 0.0) {
        throw ValidationError("weibull: shape and scale must be positive");
    }
    return scale * std::pow(-std::log1p(-uniform()), 1.0 / shape);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 sm(seed ^ (0xA0761D6478BD642FULL * (index + 1)));
    return sm.next();
}

}  // namespace weekfx::rng
