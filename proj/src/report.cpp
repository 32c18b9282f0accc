#include "weekfx/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "weekfx/errors.hpp"
#include "weekfx/version.hpp"

namespace weekfx {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::string hash_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for hashing");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return fnv1a64_hex(buffer.str());
}

namespace {

// Doubles serialize as null when not finite (JSON has no inf/nan).
nlohmann::json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

std::string fmt_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

const std::pair<MonthDay, MonthDay> kVacationWindow{{7, 1}, {8, 31}};

}  // namespace

nlohmann::json RunManifest::to_json() const {
    nlohmann::json inputs_json = nlohmann::json::array();
    for (const auto& [path, hash] : inputs) {
        inputs_json.push_back({{"path", path}, {"fnv1a64", hash}});
    }
    nlohmann::json j{
        {"command", command},
        {"inputs", inputs_json},
        {"window", {{"from", window_from}, {"to", window_to}}},
        {"parameters", parameters},
        {"tool_version", kToolVersion},
    };
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const MomentsReport& r) {
    return {
        {"n", r.n},
        {"min", num(r.min)},
        {"max", num(r.max)},
        {"sum", num(r.sum)},
        {"mean", num(r.mean)},
        {"std_dev", num(r.std_dev)},
        {"std_err", num(r.std_err)},
        {"skewness", num(r.skewness)},
        {"kurtosis", num(r.kurtosis)},
        {"shape_defined", r.shape_defined},
    };
}

nlohmann::json to_json(const Chi2Report& r) {
    return {
        {"statistic", num(r.statistic)},
        {"df", r.df},
        {"p_value", num(r.p_value)},
        {"significance_level", r.significance_level},
        {"critical_value", num(r.critical_value)},
        {"reject_uniformity", r.reject_uniformity},
        {"weighted", r.weighted},
        {"low_expected_warning", r.low_expected_warning},
        {"expected", r.expected},
        {"observed", r.observed},
    };
}

nlohmann::json to_json(const WeekdaySummary& s) {
    nlohmann::json means = nlohmann::json::array();
    for (int k = 0; k < 7; ++k) means.push_back(num(s.means[k]));
    return {
        {"category", std::string(category_name(s.category))},
        {"totals", s.totals},
        {"occurrences", s.occurrences},
        {"means", means},
        {"mode_weekday", s.mode_weekday()},
    };
}

nlohmann::json to_json(const Periodogram& p) {
    nlohmann::json freqs = nlohmann::json::array();
    nlohmann::json powers = nlohmann::json::array();
    for (Eigen::Index i = 0; i < p.frequencies.size(); ++i) {
        freqs.push_back(p.frequencies[i]);
        powers.push_back(p.powers[i]);
    }
    return {
        {"frequencies", freqs},
        {"powers", powers},
        {"peak_frequency", num(p.peak_frequency)},
        {"peak_power", num(p.peak_power)},
        {"total_power", num(p.total_power())},
    };
}

nlohmann::json to_json(const GrangerReport& r) {
    return {
        {"effect", r.effect},
        {"cause", r.cause},
        {"lags", r.lags},
        {"f_stat", num(r.f_stat)},
        {"p_value", num(r.p_value)},
        {"df_num", r.df_num},
        {"df_den", r.df_den},
        {"n_restricted", r.n_restricted},
        {"n_unrestricted", r.n_unrestricted},
        {"rss_restricted", num(r.rss_restricted)},
        {"rss_unrestricted", num(r.rss_unrestricted)},
        {"robust_wald_stat", num(r.robust_wald_stat)},
        {"robust_wald_p", num(r.robust_wald_p)},
        {"significant_10pct", r.significant_10pct},
        {"significant_5pct", r.significant_5pct},
        {"stars", r.stars()},
    };
}

nlohmann::json to_json(const BetaMatrix& b) {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 0; k < 7; ++k) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 7; ++j) row.push_back(num(b.values(k, j)));
        rows.push_back(row);
    }
    return {{"category", std::string(category_name(b.category))}, {"values", rows}};
}

nlohmann::json to_json(const FitReport& f) {
    if (f.family == FitReport::Family::weibull) {
        return {
            {"family", "weibull"},
            {"shape", num(f.shape)},
            {"scale", num(f.scale)},
            {"log_likelihood", num(f.log_likelihood)},
        };
    }
    return {
        {"family", "exponential_decay"},
        {"amplitude", num(f.amplitude)},
        {"relaxation_time", num(f.relaxation_time)},
        {"r_squared", num(f.r_squared)},
        {"non_decaying", f.non_decaying},
    };
}

nlohmann::json to_json(const TukeyReport& t) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const TukeyPair& p : t.pairs) {
        pairs.push_back({
            {"day_a", p.day_a},
            {"day_b", p.day_b},
            {"mean_difference", num(p.mean_difference)},
            {"q_statistic", num(p.q_statistic)},
            {"p_value", num(p.p_value)},
        });
    }
    return {{"pairs", pairs}, {"ms_within", num(t.ms_within)}, {"df_within", t.df_within}};
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "both") return OutputFormat::both;
    throw ValidationError("unknown output format: '" + std::string(name) + "'");
}

namespace {

constexpr EventCategory kTableCategories[3] = {EventCategory::submitted, EventCategory::accepted,
                                               EventCategory::rejected};

struct RatioSpec {
    const char* name;
    EventCategory numerator;
    EventCategory denominator;
};

constexpr RatioSpec kRatios[4] = {
    {"accepted_over_submitted", EventCategory::accepted, EventCategory::submitted},
    {"rejected_over_submitted", EventCategory::rejected, EventCategory::submitted},
    {"accepted_over_rejected", EventCategory::accepted, EventCategory::rejected},
    {"rejected_over_accepted", EventCategory::rejected, EventCategory::accepted},
};

void append_histogram_rows(std::ostringstream& csv, const std::string& window,
                           const WeekdaySummary& s) {
    for (int k = 0; k < 7; ++k) {
        csv << window << ',' << category_name(s.category) << ',' << k << ','
            << kWeekdayNames[k] << ',' << s.totals[k] << ',' << s.occurrences[k] << ','
            << fmt_double(s.means[k]) << '\n';
    }
}

}  // namespace

ReportBundle build_report(const DailyEventSeries& full_series, const RunManifest& manifest,
                          const ReportOptions& options) {
    const DailyEventSeries series =
        options.window ? slice_window(full_series, options.window->first, options.window->second)
                       : full_series;
    const auto years = split_by_year(series);

    ReportBundle bundle;
    nlohmann::json& doc = bundle.document;
    doc["schema_version"] = kReportSchemaVersion;
    doc["manifest"] = manifest.to_json();

    // --- moments per category and per ratio ---------------------------------
    {
        nlohmann::json categories = nlohmann::json::object();
        std::ostringstream csv;
        csv << "series,n,min,max,sum,mean,std_dev,std_err,skewness,kurtosis\n";
        const auto add_row = [&csv](const std::string& name, const MomentsReport& m) {
            csv << name << ',' << m.n << ',' << fmt_double(m.min) << ',' << fmt_double(m.max)
                << ',' << fmt_double(m.sum) << ',' << fmt_double(m.mean) << ','
                << fmt_double(m.std_dev) << ',' << fmt_double(m.std_err) << ','
                << (m.shape_defined ? fmt_double(m.skewness) : std::string())
                << ',' << (m.shape_defined ? fmt_double(m.kurtosis) : std::string()) << '\n';
        };
        for (EventCategory c : kAllCategories) {
            const MomentsReport m = moments(category_values(series, c));
            categories[std::string(category_name(c))] = to_json(m);
            add_row(std::string(category_name(c)), m);
        }
        nlohmann::json ratios = nlohmann::json::object();
        for (const RatioSpec& spec : kRatios) {
            const RatioSeries ratio =
                ratio_daily(series, spec.numerator, spec.denominator, options.ratio_policy);
            nlohmann::json entry;
            if (ratio.values.size() >= 2) {
                const MomentsReport m = moments(ratio.values);
                entry = to_json(m);
                add_row(spec.name, m);
            } else {
                entry = nullptr;
            }
            if (!entry.is_null()) {
                entry["zero_denominator_days"] = ratio.zero_denominator_days;
            }
            ratios[spec.name] = entry;
        }
        doc["moments"] = {{"categories", categories}, {"ratios", ratios}};
        bundle.csv_files["moments.csv"] = csv.str();
    }

    // --- chi-square uniformity, full window and per year --------------------
    {
        std::ostringstream csv;
        csv << "window,category,statistic,df,p_value,critical_value,significance_level,"
               "weighted,reject_uniformity,low_expected_warning\n";
        const auto chi2_entry = [&](const std::string& window, const DailyEventSeries& s,
                                    EventCategory c) -> nlohmann::json {
            try {
                const Chi2Report r =
                    chi2_uniform(weekday_totals(s, c), options.chi2_weighted, options.alpha);
                csv << window << ',' << category_name(c) << ',' << fmt_double(r.statistic) << ','
                    << r.df << ',' << fmt_double(r.p_value) << ',' << fmt_double(r.critical_value)
                    << ',' << fmt_double(r.significance_level) << ','
                    << (r.weighted ? "true" : "false") << ','
                    << (r.reject_uniformity ? "true" : "false") << ','
                    << (r.low_expected_warning ? "true" : "false") << '\n';
                return to_json(r);
            } catch (const ValidationError&) {
                return nullptr;  // e.g. all-zero category in this window
            }
        };
        nlohmann::json full = nlohmann::json::object();
        for (EventCategory c : kTableCategories) {
            full[std::string(category_name(c))] = chi2_entry("full", series, c);
        }
        nlohmann::json by_year = nlohmann::json::object();
        for (const auto& [year, sub] : years) {
            nlohmann::json year_json = nlohmann::json::object();
            for (EventCategory c : kTableCategories) {
                year_json[std::string(category_name(c))] =
                    chi2_entry(std::to_string(year), sub, c);
            }
            by_year[std::to_string(year)] = year_json;
        }
        doc["chi2"] = {{"full", full}, {"by_year", by_year}};
        bundle.csv_files["chi2.csv"] = csv.str();
    }

    // --- weekday histograms: full, per year, vacation -----------------------
    {
        std::ostringstream csv;
        csv << "window,category,weekday,weekday_name,total,occurrences,mean\n";
        nlohmann::json full = nlohmann::json::object();
        for (EventCategory c : kAllCategories) {
            const WeekdaySummary s = weekday_totals(series, c);
            full[std::string(category_name(c))] = to_json(s);
            append_histogram_rows(csv, "full", s);
        }
        nlohmann::json by_year = nlohmann::json::object();
        for (const auto& [year, sub] : years) {
            nlohmann::json year_json = nlohmann::json::object();
            for (EventCategory c : kAllCategories) {
                const WeekdaySummary s = weekday_totals(sub, c);
                year_json[std::string(category_name(c))] = to_json(s);
                append_histogram_rows(csv, std::to_string(year), s);
            }
            by_year[std::to_string(year)] = year_json;
        }
        nlohmann::json vacation = nlohmann::json::object();
        const std::pair<MonthDay, MonthDay> windows[1] = {kVacationWindow};
        const DayRecordSet vacation_records = seasonal_filter(series, windows);
        for (EventCategory c : kAllCategories) {
            if (vacation_records.empty()) {
                vacation[std::string(category_name(c))] = nullptr;
                continue;
            }
            const WeekdaySummary s = weekday_totals(vacation_records, c);
            vacation[std::string(category_name(c))] = to_json(s);
            append_histogram_rows(csv, "vacation", s);
        }
        doc["weekday_histograms"] = {
            {"full", full}, {"by_year", by_year}, {"vacation", vacation}};
        bundle.csv_files["weekday_histograms.csv"] = csv.str();
    }

    // --- periodogram ---------------------------------------------------------
    {
        nlohmann::json entry;
        std::ostringstream csv;
        csv << "frequency,power\n";
        try {
            const Periodogram p = periodogram(series, options.periodogram_category);
            entry = to_json(p);
            entry["category"] = std::string(category_name(options.periodogram_category));
            for (Eigen::Index i = 0; i < p.frequencies.size(); ++i) {
                csv << fmt_double(p.frequencies[i]) << ',' << fmt_double(p.powers[i]) << '\n';
            }
        } catch (const ValidationError&) {
            entry = nullptr;
        }
        doc["periodogram"] = entry;
        bundle.csv_files["periodogram.csv"] = csv.str();
    }

    // --- Granger table -------------------------------------------------------
    {
        try {
            const std::vector<GrangerReport> reports = granger_all_pairs(series, options.lags);
            nlohmann::json rows = nlohmann::json::array();
            for (const GrangerReport& r : reports) rows.push_back(to_json(r));
            doc["granger"] = rows;
            bundle.csv_files["granger.csv"] = granger_to_csv(reports);
        } catch (const ValidationError&) {
            doc["granger"] = nullptr;
            bundle.csv_files["granger.csv"] = granger_to_csv({});
        }
    }

    // --- weekday-effect coefficient matrices ---------------------------------
    {
        nlohmann::json betas = nlohmann::json::object();
        for (EventCategory c : kTableCategories) {
            const BetaMatrix beta = strong_model(series, c);
            betas[std::string(category_name(c))] = to_json(beta);
            bundle.csv_files["beta_" + std::string(category_name(c)) + ".csv"] = beta.to_csv();
        }
        doc["beta_matrices"] = betas;
    }

    // --- interval variances ---------------------------------------------------
    {
        std::ostringstream csv;
        csv << "window,category,variance\n";
        const auto var_entry = [&](const std::string& window, const DailyEventSeries& s,
                                   EventCategory c) -> nlohmann::json {
            if (s.size() < 2) return nullptr;
            const double v = variance(category_values(s, c));
            csv << window << ',' << category_name(c) << ',' << fmt_double(v) << '\n';
            return v;
        };
        nlohmann::json full = nlohmann::json::object();
        for (EventCategory c : kTableCategories) {
            full[std::string(category_name(c))] = var_entry("full", series, c);
        }
        nlohmann::json by_year = nlohmann::json::object();
        for (const auto& [year, sub] : years) {
            nlohmann::json year_json = nlohmann::json::object();
            for (EventCategory c : kTableCategories) {
                year_json[std::string(category_name(c))] =
                    var_entry(std::to_string(year), sub, c);
            }
            by_year[std::to_string(year)] = year_json;
        }
        doc["interval_variances"] = {{"full", full}, {"by_year", by_year}};
        bundle.csv_files["interval_variances.csv"] = csv.str();
    }

    // --- desk-rejection decay fits (submission-day attribution) ---------------
    {
        std::ostringstream csv;
        csv << "profile,amplitude,relaxation_time,r_squared,non_decaying\n";
        const auto decay_entry = [&](const std::string& name,
                                     const WeekdaySummary& s) -> nlohmann::json {
            try {
                const FitReport fit = exp_decay_fit(s);
                csv << name << ',' << fmt_double(fit.amplitude) << ','
                    << fmt_double(fit.relaxation_time) << ',' << fmt_double(fit.r_squared) << ','
                    << (fit.non_decaying ? "true" : "false") << '\n';
                return to_json(fit);
            } catch (const ValidationError&) {
                return nullptr;  // fewer than 3 positive weekday cells
            }
        };
        nlohmann::json fits = nlohmann::json::object();
        fits["desk_rejected_full"] =
            decay_entry("desk_rejected_full", weekday_totals(series, EventCategory::desk_rejected));
        const std::pair<MonthDay, MonthDay> windows[1] = {kVacationWindow};
        const DayRecordSet vacation_records = seasonal_filter(series, windows);
        if (vacation_records.empty()) {
            fits["desk_rejected_vacation"] = nullptr;
        } else {
            fits["desk_rejected_vacation"] = decay_entry(
                "desk_rejected_vacation",
                weekday_totals(vacation_records, EventCategory::desk_rejected));
        }
        doc["decay_fits"] = fits;
        bundle.csv_files["decay_fits.csv"] = csv.str();
    }

    return bundle;
}

ReportBundle build_deskreject_report(const std::vector<DeskRejectionRecord>& records,
                                     const RunManifest& manifest) {
    if (records.empty()) {
        throw ValidationError("deskreject: no records");
    }

    struct Histogram {
        std::array<std::int64_t, 7> totals{};
        std::int64_t records = 0;
    };
    Histogram pooled, vacation;
    std::map<EditorGroup, Histogram> by_group;
    for (const DeskRejectionRecord& r : records) {
        const int k = weekday_of(r.date);
        pooled.totals[k] += r.desk_rejections;
        pooled.records += 1;
        by_group[r.group].totals[k] += r.desk_rejections;
        by_group[r.group].records += 1;
        if (month_day_in_window({r.date.month, r.date.day}, kVacationWindow.first,
                                kVacationWindow.second)) {
            vacation.totals[k] += r.desk_rejections;
            vacation.records += 1;
        }
    }

    ReportBundle bundle;
    nlohmann::json& doc = bundle.document;
    doc["schema_version"] = kReportSchemaVersion;
    doc["manifest"] = manifest.to_json();

    std::ostringstream hist_csv;
    hist_csv << "group,weekday,weekday_name,total\n";
    const auto hist_json = [&hist_csv](const std::string& name, const Histogram& h) {
        for (int k = 0; k < 7; ++k) {
            hist_csv << name << ',' << k << ',' << kWeekdayNames[k] << ',' << h.totals[k] << '\n';
        }
        std::int64_t sum = 0;
        for (std::int64_t v : h.totals) sum += v;
        return nlohmann::json{{"totals", h.totals}, {"records", h.records}, {"sum", sum}};
    };

    nlohmann::json groups = nlohmann::json::object();
    for (EditorGroup g : {EditorGroup::OC, EditorGroup::ACBCCE, EditorGroup::OTHER}) {
        const auto it = by_group.find(g);
        groups[std::string(editor_group_name(g))] =
            it == by_group.end() ? nlohmann::json(nullptr)
                                 : hist_json(std::string(editor_group_name(g)), it->second);
    }
    doc["groups"] = groups;
    doc["pooled"] = hist_json("pooled", pooled);
    doc["vacation"] = vacation.records > 0 ? hist_json("vacation", vacation)
                                           : nlohmann::json(nullptr);
    bundle.csv_files["deskreject_histograms.csv"] = hist_csv.str();

    std::ostringstream decay_csv;
    decay_csv << "profile,amplitude,relaxation_time,r_squared,non_decaying\n";
    const auto decay_entry = [&decay_csv](const std::string& name,
                                          const Histogram& h) -> nlohmann::json {
        Eigen::VectorXd profile(7);
        for (int k = 0; k < 7; ++k) profile[k] = static_cast<double>(h.totals[k]);
        try {
            const FitReport fit = exp_decay_fit(profile);
            decay_csv << name << ',' << fmt_double(fit.amplitude) << ','
                      << fmt_double(fit.relaxation_time) << ',' << fmt_double(fit.r_squared)
                      << ',' << (fit.non_decaying ? "true" : "false") << '\n';
            return to_json(fit);
        } catch (const ValidationError&) {
            return nullptr;
        }
    };
    doc["decay_fits"] = {
        {"pooled", decay_entry("pooled", pooled)},
        {"vacation", vacation.records > 0 ? decay_entry("vacation", vacation)
                                          : nlohmann::json(nullptr)},
    };
    bundle.csv_files["deskreject_decay.csv"] = decay_csv.str();
    return bundle;
}

void write_bundle(const ReportBundle& bundle, const std::filesystem::path& out_dir,
                  OutputFormat format, const std::string& json_name) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + out_dir.string());
    }
    const auto write_file = [&](const std::filesystem::path& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write " + path.string());
        out << text;
        if (!out) throw IoError("failed writing " + path.string());
    };
    if (format != OutputFormat::csv) {
        write_file(out_dir / json_name, bundle.document.dump(2) + "\n");
    }
    if (format != OutputFormat::json) {
        for (const auto& [name, text] : bundle.csv_files) {
            write_file(out_dir / name, text);
        }
    }
}

}  // namespace weekfx
