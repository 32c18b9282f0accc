#include "weekfx/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "weekfx/errors.hpp"

namespace weekfx {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

std::int64_t parse_count(std::string_view field, const std::string& origin, std::size_t line_no,
                         std::string_view column) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ValidationError(origin + ":" + std::to_string(line_no) + ": column '" +
                              std::string(column) + "' is not an integer count: '" +
                              std::string(field) + "'");
    }
    if (value < 0) {
        throw ValidationError(origin + ":" + std::to_string(line_no) + ": column '" +
                              std::string(column) + "' is negative");
    }
    return value;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

DailyEventSeries load_csv_stream(std::istream& in, const std::string& origin) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError(origin + ": empty file");
    }
    line = strip_cr(line);
    if (line != kSeriesCsvHeader) {
        throw ValidationError(origin + ":1: bad header, want '" + std::string(kSeriesCsvHeader) +
                              "'");
    }

    CivilDate start{};
    std::vector<DayCounts> days;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 6) {
            throw ValidationError(origin + ":" + std::to_string(line_no) + ": expected 6 fields, got " +
                                  std::to_string(fields.size()));
        }
        CivilDate date;
        try {
            date = parse_iso_date(fields[0]);
        } catch (const ValidationError& e) {
            throw ValidationError(origin + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (days.empty()) {
            start = date;
        } else {
            const CivilDate expected = add_days(start, static_cast<std::int64_t>(days.size()));
            if (date == add_days(expected, -1)) {
                throw ValidationError(origin + ":" + std::to_string(line_no) +
                                      ": duplicate date " + format_iso_date(date));
            }
            if (date != expected) {
                throw ValidationError(origin + ":" + std::to_string(line_no) + ": gap in dates, expected " +
                                      format_iso_date(expected) + " but found " +
                                      format_iso_date(date));
            }
        }
        DayCounts c;
        c.submitted = parse_count(fields[1], origin, line_no, "submitted");
        c.accepted = parse_count(fields[2], origin, line_no, "accepted");
        c.rejected = parse_count(fields[3], origin, line_no, "rejected");
        c.desk_rejected = parse_count(fields[4], origin, line_no, "desk_rejected");
        c.withdrawn = parse_count(fields[5], origin, line_no, "withdrawn");
        if (c.submitted != c.accepted + c.rejected + c.withdrawn) {
            throw ValidationError(origin + ":" + std::to_string(line_no) +
                                  ": submitted != accepted + rejected + withdrawn on " +
                                  format_iso_date(date));
        }
        if (c.desk_rejected > c.rejected) {
            throw ValidationError(origin + ":" + std::to_string(line_no) +
                                  ": desk_rejected exceeds rejected on " + format_iso_date(date));
        }
        days.push_back(c);
    }
    if (days.empty()) {
        throw ValidationError(origin + ": no data rows");
    }
    return DailyEventSeries(start, std::move(days));
}

DailyEventSeries load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return load_csv_stream(in, path.string());
}

std::string to_csv(const DailyEventSeries& series) {
    std::ostringstream out;
    out << kSeriesCsvHeader << '\n';
    for (std::size_t t = 0; t < series.size(); ++t) {
        const DayCounts& c = series.day(t);
        out << format_iso_date(series.date_of(t)) << ',' << c.submitted << ',' << c.accepted << ','
            << c.rejected << ',' << c.desk_rejected << ',' << c.withdrawn << '\n';
    }
    return out.str();
}

void write_csv(const DailyEventSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << to_csv(series);
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

std::string_view editor_group_name(EditorGroup g) {
    switch (g) {
        case EditorGroup::OC: return "OC";
        case EditorGroup::ACBCCE: return "ACBCCE";
        case EditorGroup::OTHER: return "OTHER";
    }
    return "?";
}

EditorGroup parse_editor_group(std::string_view name) {
    if (name == "OC") return EditorGroup::OC;
    if (name == "ACBCCE") return EditorGroup::ACBCCE;
    if (name == "OTHER") return EditorGroup::OTHER;
    throw ValidationError("unknown editor group: '" + std::string(name) + "'");
}

std::vector<DeskRejectionRecord> load_decision_csv_stream(std::istream& in,
                                                          const std::string& origin) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError(origin + ": empty file");
    }
    line = strip_cr(line);
    if (line != kDecisionCsvHeader) {
        throw ValidationError(origin + ":1: bad header, want '" + std::string(kDecisionCsvHeader) +
                              "'");
    }
    std::vector<DeskRejectionRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 3) {
            throw ValidationError(origin + ":" + std::to_string(line_no) + ": expected 3 fields");
        }
        DeskRejectionRecord r;
        try {
            r.date = parse_iso_date(fields[0]);
            r.group = parse_editor_group(fields[1]);
        } catch (const ValidationError& e) {
            throw ValidationError(origin + ":" + std::to_string(line_no) + ": " + e.what());
        }
        r.desk_rejections = parse_count(fields[2], origin, line_no, "desk_rejections");
        records.push_back(r);
    }
    if (records.empty()) {
        throw ValidationError(origin + ": no data rows");
    }
    return records;
}

std::vector<DeskRejectionRecord> load_decision_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return load_decision_csv_stream(in, path.string());
}

}  // namespace weekfx
