// Machine-readable reports emitted by the CLI. One Report covers a single
// estimate or oracle value; commands that produce several related results
// nest them under `series`. The JSON schema is versioned and round-trips
// losslessly at full precision; see the README for the field reference.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bayeserr/estimate.hpp"

namespace bayeserr {

struct ReportMeta {
    std::optional<std::string> input;
    std::optional<std::string> predictions;
    std::optional<std::string> output;
    std::optional<std::string> setup;
    std::optional<std::string> grouping;
    std::optional<std::string> mode;
    std::optional<std::string> emit;
    std::optional<std::string> votes_format;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> n_per_class;
    std::optional<std::uint64_t> resamples;
    std::optional<std::uint64_t> samples;
    std::optional<double> sigma;
    std::optional<double> delta;
    std::optional<double> prior;
    std::vector<std::uint64_t> grid;

    bool operator==(const ReportMeta&) const = default;
};

struct Report {
    std::string command;
    std::optional<std::string> estimator;
    std::optional<std::uint64_t> n;
    std::optional<double> point;
    std::optional<double> std_error;
    std::optional<double> oracle;
    std::optional<double> analytic;
    std::vector<Interval> intervals;
    std::vector<double> trial_series;
    std::vector<Report> series;
    ReportMeta meta;

    bool operator==(const Report&) const = default;
};

// Rounds to `digits` significant decimal digits; used for the default report
// precision of 6. Returns x unchanged for non-finite input.
double round_sig(double x, int digits);

struct ReportFormat {
    // 0 means full precision (shortest round-trip decimal).
    int sig_digits = 6;
};

std::string report_to_json(const Report& report, ReportFormat format = {});
Report report_from_json(const std::string& text);

// Flat CSV view: one row per leaf report and interval. Nested series rows
// repeat the leaf fields; trial series are JSON-only.
std::string report_to_csv(const Report& report, ReportFormat format = {});

} // namespace bayeserr
