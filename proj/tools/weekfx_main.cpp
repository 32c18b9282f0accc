// weekfx command line: batch analysis of day-of-week effects in daily
// event-count series.
//
//   weekfx synth      --config cfg.json --out series.csv
//   weekfx report     --input series.csv --out report_dir
//   weekfx deskreject --input decisions.csv --out report_dir

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "weekfx/csv.hpp"
#include "weekfx/errors.hpp"
#include "weekfx/report.hpp"
#include "weekfx/synth.hpp"
#include "weekfx/version.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

std::pair<weekfx::CivilDate, weekfx::CivilDate> parse_window(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw weekfx::ValidationError("window must be FROM:TO with ISO dates");
    }
    const auto from = weekfx::parse_iso_date(text.substr(0, colon));
    const auto to = weekfx::parse_iso_date(text.substr(colon + 1));
    if (to < from) {
        throw weekfx::ValidationError("window end precedes window start");
    }
    return {from, to};
}

int run_synth(const std::string& config_path, const std::string& out_path,
              std::optional<std::uint64_t> seed_override) {
    weekfx::SynthConfig config = weekfx::load_synth_config(config_path);
    if (seed_override) config.seed = *seed_override;
    const weekfx::DailyEventSeries series = weekfx::generate(config);
    weekfx::write_csv(series, out_path);
    std::cout << "wrote " << out_path << " (" << series.size() << " days, seed " << config.seed
              << ")\n";
    return 0;
}

int run_report(const std::string& input_path, const std::string& out_dir,
               const std::string& window_text, int lags, double alpha, bool chi2_weighted,
               const std::string& ratio_policy, const std::string& category,
               const std::string& format) {
    weekfx::ReportOptions options;
    if (!window_text.empty()) options.window = parse_window(window_text);
    options.lags = lags;
    options.alpha = alpha;
    options.chi2_weighted = chi2_weighted;
    if (ratio_policy == "zero") {
        options.ratio_policy = weekfx::RatioPolicy::zero_fill;
    } else if (ratio_policy == "skip") {
        options.ratio_policy = weekfx::RatioPolicy::skip;
    } else {
        throw weekfx::ValidationError("--ratio-policy must be 'zero' or 'skip'");
    }
    options.periodogram_category = weekfx::parse_category(category);
    options.format = weekfx::parse_output_format(format);

    const weekfx::DailyEventSeries series = weekfx::load_csv(input_path);

    weekfx::RunManifest manifest;
    manifest.command = "report";
    manifest.inputs.emplace_back(input_path, weekfx::hash_file(input_path));
    const auto from = options.window ? options.window->first : series.start_date();
    const auto to = options.window ? options.window->second : series.end_date();
    manifest.window_from = weekfx::format_iso_date(from);
    manifest.window_to = weekfx::format_iso_date(to);
    manifest.parameters = {
        {"lags", lags},
        {"alpha", alpha},
        {"chi2_weighted", chi2_weighted},
        {"ratio_policy", ratio_policy},
        {"periodogram_category", category},
        {"format", format},
    };

    const weekfx::ReportBundle bundle = weekfx::build_report(series, manifest, options);
    weekfx::write_bundle(bundle, out_dir, options.format, "report.json");
    std::cout << "report written to " << out_dir << "\n";
    return 0;
}

int run_deskreject(const std::string& input_path, const std::string& out_dir,
                   const std::string& format) {
    const auto records = weekfx::load_decision_csv(input_path);

    weekfx::RunManifest manifest;
    manifest.command = "deskreject";
    manifest.inputs.emplace_back(input_path, weekfx::hash_file(input_path));
    weekfx::CivilDate lo = records.front().date, hi = records.front().date;
    for (const auto& r : records) {
        lo = std::min(lo, r.date);
        hi = std::max(hi, r.date);
    }
    manifest.window_from = weekfx::format_iso_date(lo);
    manifest.window_to = weekfx::format_iso_date(hi);
    manifest.parameters = {{"format", format}};

    const weekfx::ReportBundle bundle = weekfx::build_deskreject_report(records, manifest);
    weekfx::write_bundle(bundle, out_dir, weekfx::parse_output_format(format),
                         "deskreject.json");
    std::cout << "desk-rejection report written to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"day-of-week effect analysis for daily event-count series"};
    app.set_version_flag("--version", weekfx::kToolVersion);
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "generate a seeded synthetic series CSV");
    std::string synth_config, synth_out;
    std::optional<std::uint64_t> synth_seed;
    synth->add_option("--config", synth_config, "JSON generator config")->required();
    synth->add_option("--out", synth_out, "output CSV path")->required();
    synth->add_option("--seed", synth_seed, "override the config seed");

    // report
    auto* report = app.add_subcommand("report", "full analysis bundle for a series CSV");
    std::string rep_input, rep_out = "weekfx_report", rep_window, rep_format = "both";
    std::string rep_ratio_policy = "zero", rep_category = "submitted";
    int rep_lags = 7;
    double rep_alpha = 0.05;
    bool rep_chi2_weighted = false;
    report->add_option("--input", rep_input, "daily series CSV")->required();
    report->add_option("--out", rep_out, "output directory");
    report->add_option("--window", rep_window, "analysis window FROM:TO (ISO dates)");
    report->add_option("--lags", rep_lags, "Granger lag order")->check(CLI::PositiveNumber);
    report->add_option("--alpha", rep_alpha, "significance level for uniformity tests");
    report->add_flag("--chi2-weighted", rep_chi2_weighted,
                     "weight expected weekday counts by calendar occurrences");
    report->add_option("--ratio-policy", rep_ratio_policy,
                       "zero-denominator ratio days: 'zero' or 'skip'");
    report->add_option("--category", rep_category, "periodogram category");
    report->add_option("--format", rep_format, "json, csv, or both");

    // deskreject
    auto* deskreject =
        app.add_subcommand("deskreject", "decision-day desk-rejection analysis");
    std::string desk_input, desk_out = "weekfx_deskreject", desk_format = "both";
    deskreject->add_option("--input", desk_input, "decision-day CSV")->required();
    deskreject->add_option("--out", desk_out, "output directory");
    deskreject->add_option("--format", desk_format, "json, csv, or both");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) return run_synth(synth_config, synth_out, synth_seed);
        if (report->parsed()) {
            return run_report(rep_input, rep_out, rep_window, rep_lags, rep_alpha,
                              rep_chi2_weighted, rep_ratio_policy, rep_category, rep_format);
        }
        if (deskreject->parsed()) return run_deskreject(desk_input, desk_out, desk_format);
    } catch (const weekfx::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const weekfx::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const weekfx::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
