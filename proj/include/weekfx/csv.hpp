#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "weekfx/series.hpp"

namespace weekfx {

/// Canonical daily series schema:
///   date,submitted,accepted,rejected,desk_rejected,withdrawn
/// ISO-8601 dates, rows sorted and contiguous, UTF-8, no quoting.
inline constexpr std::string_view kSeriesCsvHeader =
    "date,submitted,accepted,rejected,desk_rejected,withdrawn";

/// Loads and validates a daily series. Throws IoError when the file cannot
/// be read and ValidationError naming the offending row for schema, gap,
/// duplicate, negative-count, or count-identity violations.
[[nodiscard]] DailyEventSeries load_csv(const std::filesystem::path& path);
[[nodiscard]] DailyEventSeries load_csv_stream(std::istream& in, const std::string& origin);

void write_csv(const DailyEventSeries& series, const std::filesystem::path& path);
std::string to_csv(const DailyEventSeries& series);

/// Editor groups of the decision-day input. OC is the main-editor group,
/// ACBCCE the mid-size subfield group, OTHER the remaining editors.
enum class EditorGroup { OC, ACBCCE, OTHER };

[[nodiscard]] std::string_view editor_group_name(EditorGroup g);
[[nodiscard]] EditorGroup parse_editor_group(std::string_view name);

/// One row of the decision-day schema: date,editor_group,desk_rejections.
/// Dates need not be contiguous; a date may appear once per group.
struct DeskRejectionRecord {
    CivilDate date;
    EditorGroup group = EditorGroup::OTHER;
    std::int64_t desk_rejections = 0;
};

inline constexpr std::string_view kDecisionCsvHeader = "date,editor_group,desk_rejections";

[[nodiscard]] std::vector<DeskRejectionRecord> load_decision_csv(
    const std::filesystem::path& path);
[[nodiscard]] std::vector<DeskRejectionRecord> load_decision_csv_stream(
    std::istream& in, const std::string& origin);

}  // namespace weekfx
