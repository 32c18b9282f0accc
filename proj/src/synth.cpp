#include "weekfx/synth.hpp"

#include <fstream>

#include <json.hpp>

#include "weekfx/errors.hpp"
#include "weekfx/rng.hpp"

namespace weekfx {

void SynthConfig::validate() const {
    if (!is_valid_date(start_date)) {
        throw ValidationError("synth config: invalid start date");
    }
    if (n_days < 1) {
        throw ValidationError("synth config: n_days must be at least 1");
    }
    for (int k = 0; k < 7; ++k) {
        if (!(weekday_rates[k] >= 0.0)) {
            throw ValidationError("synth config: weekday rates must be nonnegative");
        }
        if (!(accept_prob[k] >= 0.0 && accept_prob[k] <= 1.0)) {
            throw ValidationError("synth config: accept_prob must lie in [0, 1]");
        }
        if (!(desk_reject_frac[k] >= 0.0 && desk_reject_frac[k] <= 1.0)) {
            throw ValidationError("synth config: desk_reject_frac must lie in [0, 1]");
        }
    }
    if (!(withdraw_prob >= 0.0 && withdraw_prob <= 1.0)) {
        throw ValidationError("synth config: withdraw_prob must lie in [0, 1]");
    }
}

SynthConfig load_synth_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path.string() + ": bad JSON: " + e.what());
    }
    SynthConfig cfg;
    try {
        cfg.start_date = parse_iso_date(j.at("start_date").get<std::string>());
        cfg.n_days = j.at("n_days").get<std::int64_t>();
        const auto read7 = [&j](const char* key, std::array<double, 7>& out) {
            const auto& arr = j.at(key);
            if (!arr.is_array() || arr.size() != 7) {
                throw ValidationError(std::string("synth config: '") + key +
                                      "' must be an array of 7 numbers (Sun..Sat)");
            }
            for (int k = 0; k < 7; ++k) out[k] = arr[k].get<double>();
        };
        read7("weekday_rates", cfg.weekday_rates);
        read7("accept_prob", cfg.accept_prob);
        read7("desk_reject_frac", cfg.desk_reject_frac);
        cfg.withdraw_prob = j.at("withdraw_prob").get<double>();
        cfg.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    cfg.validate();
    return cfg;
}

DailyEventSeries generate(const SynthConfig& config) {
    config.validate();
    rng::Xoshiro256pp gen(config.seed);
    std::vector<DayCounts> days;
    days.reserve(static_cast<std::size_t>(config.n_days));
    int weekday = weekday_of(config.start_date);
    for (std::int64_t t = 0; t < config.n_days; ++t, weekday = (weekday + 1) % 7) {
        DayCounts c;
        c.submitted = gen.poisson(config.weekday_rates[weekday]);
        // Fixed per-paper draw order: withdraw decision first, then fate.
        for (std::int64_t paper = 0; paper < c.submitted; ++paper) {
            if (gen.bernoulli(config.withdraw_prob)) {
                ++c.withdrawn;
            } else if (gen.bernoulli(config.accept_prob[weekday])) {
                ++c.accepted;
            } else {
                ++c.rejected;
            }
        }
        c.desk_rejected = gen.binomial(c.rejected, config.desk_reject_frac[weekday]);
        days.push_back(c);
    }
    return DailyEventSeries(config.start_date, std::move(days));
}

PlantedEffects planted_effect_oracle(const SynthConfig& config) {
    config.validate();
    PlantedEffects effects;
    for (int k = 0; k < 7; ++k) effects.expected_means[k] = config.weekday_rates[k];
    for (int k = 0; k < 7; ++k) {
        for (int j = 0; j < 7; ++j) {
            effects.expected_beta(k, j) = config.weekday_rates[j] - config.weekday_rates[k];
        }
    }
    return effects;
}

}  // namespace weekfx
