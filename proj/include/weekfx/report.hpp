#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weekfx/csv.hpp"
#include "weekfx/descriptives.hpp"
#include "weekfx/distfit.hpp"
#include "weekfx/granger.hpp"
#include "weekfx/regression.hpp"
#include "weekfx/series.hpp"

namespace weekfx {

/// FNV-1a 64-bit hash, used to fingerprint report inputs.
[[nodiscard]] std::uint64_t fnv1a64(std::string_view bytes);
[[nodiscard]] std::string fnv1a64_hex(std::string_view bytes);
[[nodiscard]] std::string hash_file(const std::filesystem::path& path);

/// Provenance block embedded in every emitted report. Two runs with an
/// identical manifest produce byte-identical bundles.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  ///< (path, content hash)
    std::string window_from;
    std::string window_to;
    nlohmann::json parameters = nlohmann::json::object();
    std::optional<std::uint64_t> seed;

    [[nodiscard]] nlohmann::json to_json() const;
};

nlohmann::json to_json(const MomentsReport& r);
nlohmann::json to_json(const Chi2Report& r);
nlohmann::json to_json(const WeekdaySummary& s);
nlohmann::json to_json(const Periodogram& p);
nlohmann::json to_json(const GrangerReport& r);
nlohmann::json to_json(const BetaMatrix& b);
nlohmann::json to_json(const FitReport& f);
nlohmann::json to_json(const TukeyReport& t);

enum class OutputFormat { json, csv, both };
[[nodiscard]] OutputFormat parse_output_format(std::string_view name);

struct ReportOptions {
    std::optional<std::pair<CivilDate, CivilDate>> window;  ///< default: full series
    int lags = 7;
    double alpha = 0.05;
    bool chi2_weighted = false;
    RatioPolicy ratio_policy = RatioPolicy::zero_fill;
    EventCategory periodogram_category = EventCategory::submitted;
    OutputFormat format = OutputFormat::both;
};

/// A fully assembled report: the JSON document plus named CSV artifacts.
struct ReportBundle {
    nlohmann::json document;
    std::map<std::string, std::string> csv_files;  ///< file name -> contents
};

/// Runs the full analysis pipeline over the (optionally windowed) series:
/// moments per category and ratio, chi-square uniformity for the full window
/// and per year, weekday histograms (full, per year, vacation), periodogram,
/// the six-pair Granger table, the three weekday-effect coefficient
/// matrices, interval variances, and desk-rejection decay fits.
/// Sections whose preconditions the data cannot meet are emitted as null.
[[nodiscard]] ReportBundle build_report(const DailyEventSeries& series,
                                        const RunManifest& manifest,
                                        const ReportOptions& options);

/// Decision-day analysis: per-group and pooled weekday histograms of desk
/// rejections, a pooled exponential-decay fit, and the July-August variant.
[[nodiscard]] ReportBundle build_deskreject_report(
    const std::vector<DeskRejectionRecord>& records, const RunManifest& manifest);

/// Writes report.json (or deskreject.json) plus the CSV artifacts into
/// `out_dir`, honoring the format selection.
void write_bundle(const ReportBundle& bundle, const std::filesystem::path& out_dir,
                  OutputFormat format, const std::string& json_name);

}  // namespace weekfx
