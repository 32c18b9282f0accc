#pragma once

#include <array>
#include <cstdint>
#include <filesystem>

#include "weekfx/regression.hpp"
#include "weekfx/series.hpp"

namespace weekfx {

/// Parameters of the seeded synthetic submission/fate generator.
/// Per day with weekday k: submitted ~ Poisson(weekday_rates[k]); each paper
/// is withdrawn with withdraw_prob, otherwise accepted with accept_prob[k],
/// otherwise rejected; desk rejections ~ Binomial(rejected, desk_reject_frac[k]).
struct SynthConfig {
    CivilDate start_date{2013, 1, 1};
    std::int64_t n_days = 730;
    std::array<double, 7> weekday_rates{};      ///< expected submissions, Sun..Sat
    std::array<double, 7> accept_prob{};        ///< per-paper acceptance probability
    std::array<double, 7> desk_reject_frac{};   ///< desk share of rejections
    double withdraw_prob = 0.0;
    std::uint64_t seed = 0;

    /// Throws ValidationError when rates are negative, probabilities leave
    /// [0,1], the window is empty, or the start date is invalid.
    void validate() const;
};

/// Loads a SynthConfig from a JSON file (see docs for the field names).
[[nodiscard]] SynthConfig load_synth_config(const std::filesystem::path& path);

/// Deterministic generation: identical config and seed give a bitwise
/// identical series on every platform (xoshiro256++ stream, documented
/// sampler algorithms, fixed per-paper draw order).
[[nodiscard]] DailyEventSeries generate(const SynthConfig& config);

/// Closed-form expectations implied by a config, used as an independent
/// oracle for the regression estimators.
struct PlantedEffects {
    Vector7d expected_means = Vector7d::Zero();     ///< expected submissions per weekday
    Matrix7d expected_beta = Matrix7d::Zero();      ///< rates[j] - rates[k]
};

[[nodiscard]] PlantedEffects planted_effect_oracle(const SynthConfig& config);

}  // namespace weekfx
