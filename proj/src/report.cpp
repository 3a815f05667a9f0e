#include "bayeserr/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bayeserr/errors.hpp"

namespace bayeserr {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "bayeserr-report/1";

double maybe_round(double x, const ReportFormat& format) {
    return format.sig_digits > 0 ? round_sig(x, format.sig_digits) : x;
}

template <typename T>
void put(ordered_json& j, const char* key, const std::optional<T>& value) {
    if (value.has_value()) j[key] = *value;
}

void put_rounded(ordered_json& j, const char* key, const std::optional<double>& value,
                 const ReportFormat& format) {
    if (value.has_value()) j[key] = maybe_round(*value, format);
}

ordered_json meta_to_json(const ReportMeta& meta, const ReportFormat& format) {
    ordered_json j = ordered_json::object();
    put(j, "input", meta.input);
    put(j, "predictions", meta.predictions);
    put(j, "output", meta.output);
    put(j, "setup", meta.setup);
    put(j, "grouping", meta.grouping);
    put(j, "mode", meta.mode);
    put(j, "emit", meta.emit);
    put(j, "votes_format", meta.votes_format);
    put(j, "seed", meta.seed);
    put(j, "trials", meta.trials);
    put(j, "n_per_class", meta.n_per_class);
    put(j, "resamples", meta.resamples);
    put(j, "samples", meta.samples);
    put_rounded(j, "sigma", meta.sigma, format);
    put_rounded(j, "delta", meta.delta, format);
    put_rounded(j, "prior", meta.prior, format);
    if (!meta.grid.empty()) j["grid"] = meta.grid;
    return j;
}

ordered_json report_to_json_obj(const Report& report, const ReportFormat& format) {
    ordered_json j = ordered_json::object();
    j["command"] = report.command;
    put(j, "estimator", report.estimator);
    put(j, "n", report.n);
    put_rounded(j, "point", report.point, format);
    put_rounded(j, "std_error", report.std_error, format);
    put_rounded(j, "oracle", report.oracle, format);
    put_rounded(j, "analytic", report.analytic, format);
    if (!report.intervals.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& iv : report.intervals) {
            ordered_json item = ordered_json::object();
            item["method"] = to_string(iv.method);
            item["delta"] = maybe_round(iv.delta, format);
            item["lower"] = maybe_round(iv.lower, format);
            item["upper"] = maybe_round(iv.upper, format);
            arr.push_back(std::move(item));
        }
        j["intervals"] = std::move(arr);
    }
    if (!report.trial_series.empty()) {
        ordered_json arr = ordered_json::array();
        for (double v : report.trial_series) arr.push_back(maybe_round(v, format));
        j["trial_series"] = std::move(arr);
    }
    const ordered_json meta = meta_to_json(report.meta, format);
    if (!meta.empty()) j["metadata"] = meta;
    if (!report.series.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& sub : report.series) arr.push_back(report_to_json_obj(sub, format));
        j["series"] = std::move(arr);
    }
    return j;
}

template <typename T>
void get(const ordered_json& j, const char* key, std::optional<T>& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

ReportMeta meta_from_json(const ordered_json& j) {
    ReportMeta meta;
    get(j, "input", meta.input);
    get(j, "predictions", meta.predictions);
    get(j, "output", meta.output);
    get(j, "setup", meta.setup);
    get(j, "grouping", meta.grouping);
    get(j, "mode", meta.mode);
    get(j, "emit", meta.emit);
    get(j, "votes_format", meta.votes_format);
    get(j, "seed", meta.seed);
    get(j, "trials", meta.trials);
    get(j, "n_per_class", meta.n_per_class);
    get(j, "resamples", meta.resamples);
    get(j, "samples", meta.samples);
    get(j, "sigma", meta.sigma);
    get(j, "delta", meta.delta);
    get(j, "prior", meta.prior);
    if (j.contains("grid")) meta.grid = j.at("grid").get<std::vector<std::uint64_t>>();
    return meta;
}

Report report_from_json_obj(const ordered_json& j) {
    Report report;
    report.command = j.at("command").get<std::string>();
    get(j, "estimator", report.estimator);
    get(j, "n", report.n);
    get(j, "point", report.point);
    get(j, "std_error", report.std_error);
    get(j, "oracle", report.oracle);
    get(j, "analytic", report.analytic);
    if (j.contains("intervals")) {
        for (const auto& item : j.at("intervals")) {
            Interval iv;
            iv.method = interval_method_from_string(item.at("method").get<std::string>());
            iv.delta = item.at("delta").get<double>();
            iv.lower = item.at("lower").get<double>();
            iv.upper = item.at("upper").get<double>();
            report.intervals.push_back(iv);
        }
    }
    if (j.contains("trial_series")) {
        report.trial_series = j.at("trial_series").get<std::vector<double>>();
    }
    if (j.contains("metadata")) report.meta = meta_from_json(j.at("metadata"));
    if (j.contains("series")) {
        for (const auto& item : j.at("series")) {
            report.series.push_back(report_from_json_obj(item));
        }
    }
    return report;
}

std::string format_cell(double x, const ReportFormat& format) {
    char buf[64];
    if (format.sig_digits > 0) {
        std::snprintf(buf, sizeof(buf), "%.*g", format.sig_digits, x);
    } else {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
    }
    return buf;
}

void csv_rows(const Report& report, const ReportFormat& format, std::ostringstream& out) {
    if (!report.series.empty()) {
        for (const auto& sub : report.series) csv_rows(sub, format, out);
        return;
    }
    const auto cell = [&](const std::optional<double>& v) {
        return v.has_value() ? format_cell(*v, format) : std::string();
    };
    const std::string base = report.command + "," +
                             report.estimator.value_or("") + "," +
                             (report.n ? std::to_string(*report.n) : "") + "," +
                             cell(report.point) + "," + cell(report.std_error) + "," +
                             cell(report.oracle) + "," + cell(report.analytic);
    if (report.intervals.empty()) {
        out << base << ",,,,\n";
        return;
    }
    for (const auto& iv : report.intervals) {
        out << base << "," << to_string(iv.method) << "," << format_cell(iv.delta, format)
            << "," << format_cell(iv.lower, format) << "," << format_cell(iv.upper, format)
            << "\n";
    }
}

} // namespace

double round_sig(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

std::string report_to_json(const Report& report, ReportFormat format) {
    ordered_json j = report_to_json_obj(report, format);
    ordered_json root = ordered_json::object();
    root["schema"] = kSchema;
    for (auto& [key, value] : j.items()) root[key] = std::move(value);
    return root.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("report is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("schema", "") != kSchema) {
        throw ParseError(0, "unrecognized report schema");
    }
    return report_from_json_obj(doc);
}

std::string report_to_csv(const Report& report, ReportFormat format) {
    std::ostringstream out;
    out << "command,estimator,n,point,std_error,oracle,analytic,ci_method,ci_delta,"
           "ci_lower,ci_upper\n";
    csv_rows(report, format, out);
    return out.str();
}

} // namespace bayeserr
