// bayeserr CLI: estimate / synth / oracle / ingest / eval subcommands.
// Exit codes: 0 success, 2 usage or validation error, 1 internal error.
// stdout carries only the report; diagnostics go to stderr.
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bayeserr/errors.hpp"
#include "bayeserr/estimate.hpp"
#include "bayeserr/gaussian.hpp"
#include "bayeserr/ingest.hpp"
#include "bayeserr/intervals.hpp"
#include "bayeserr/kahan.hpp"
#include "bayeserr/noise.hpp"
#include "bayeserr/report.hpp"
#include "bayeserr/rng.hpp"

namespace {

using namespace bayeserr;

// Stream index reserved for the oracle inside synth; grid streams use the n
// value itself, which is always >= 1.
constexpr std::uint64_t kOracleStream = 0;

struct CommonFlags {
    std::string format = "json";
    bool full_precision = false;

    ReportFormat report_format() const {
        return ReportFormat{full_precision ? 0 : 6};
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--full-precision", flags.full_precision,
                  "Serialize report numbers at full precision instead of 6 "
                  "significant digits");
}

void emit(const Report& report, const CommonFlags& flags) {
    if (flags.format == "csv") {
        std::cout << report_to_csv(report, flags.report_format());
    } else {
        std::cout << report_to_json(report, flags.report_format());
    }
}

double parse_double_cell(const std::string& cell, std::size_t line_no) {
    std::string body = cell;
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
        throw ParseError(line_no, "expected a number, got \"" + cell + "\"");
    }
    return value;
}

int parse_sign_cell(const std::string& cell, std::size_t line_no) {
    if (cell == "1" || cell == "+1") return 1;
    if (cell == "-1") return -1;
    throw ParseError(line_no, "expected a sign of +1 or -1, got \"" + cell + "\"");
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string::size_type start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        std::string cell = line.substr(start, comma - start);
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        while (!cell.empty() && cell.front() == ' ') cell.erase(0, 1);
        cells.push_back(std::move(cell));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

struct ParsedLabels {
    std::vector<double> primary;
    std::vector<int> signs;
};

// Label CSV for `estimate`: header names the declared columns (soft: c,
// uncertainty: u01, noisy: u,s, pconf: r), optionally preceded by sample_id.
ParsedLabels parse_label_file(const std::string& path, EstimatorKind kind) {
    std::vector<std::string> expected;
    switch (kind) {
        case EstimatorKind::soft: expected = {"c"}; break;
        case EstimatorKind::uncertainty: expected = {"u01"}; break;
        case EstimatorKind::noisy_naive:
        case EstimatorKind::noisy_signed: expected = {"u", "s"}; break;
        case EstimatorKind::pconf: expected = {"r"}; break;
    }
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open \"" + path + "\"");
    std::string line;
    std::size_t line_no = 0;
    std::size_t offset = 0;
    bool have_header = false;
    ParsedLabels out;
    while (std::getline(in, line)) {
        ++line_no;
        auto cells = split_line(line);
        if (cells.size() == 1 && cells[0].empty()) continue;
        if (!have_header) {
            offset = (!cells.empty() && cells[0] == "sample_id") ? 1 : 0;
            if (cells.size() != offset + expected.size()) {
                throw ParseError(line_no, "header must name columns " +
                                              std::string(expected.size() == 1
                                                              ? expected[0]
                                                              : expected[0] + "," + expected[1]) +
                                              " (optionally after sample_id)");
            }
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (cells[offset + i] != expected[i]) {
                    throw ParseError(line_no, "unexpected column \"" + cells[offset + i] +
                                                  "\", expected \"" + expected[i] + "\"");
                }
            }
            have_header = true;
            continue;
        }
        if (cells.size() != offset + expected.size()) {
            throw ParseError(line_no, "expected " + std::to_string(offset + expected.size()) +
                                          " cells, got " + std::to_string(cells.size()));
        }
        out.primary.push_back(parse_double_cell(cells[offset], line_no));
        if (expected.size() == 2) {
            out.signs.push_back(parse_sign_cell(cells[offset + 1], line_no));
        }
    }
    if (!have_header) throw ParseError(1, "missing header row");
    return out;
}

std::string shortest_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double sample_std_error(const std::vector<double>& points) {
    const double mean = kahan_mean(points);
    KahanSum sq;
    for (double p : points) {
        const double d = p - mean;
        sq.add(d * d);
    }
    const double var = sq.value() / static_cast<double>(points.size() - 1);
    return std::sqrt(std::max(0.0, var) / static_cast<double>(points.size()));
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateArgs {
    std::string input;
    std::string kind;
    double delta = 0.05;
    std::optional<double> prior;
    std::vector<std::string> ci = {"auto"};
    CommonFlags common;
};

IntervalRequest resolve_ci(const std::vector<std::string>& ci, EstimatorKind kind,
                           std::size_t n) {
    IntervalRequest req;
    for (const auto& name : ci) {
        if (name == "none") {
            if (ci.size() != 1) throw Error("--ci none cannot be combined");
            return {};
        }
        if (name == "auto") {
            if (ci.size() != 1) throw Error("--ci auto cannot be combined");
            if (kind == EstimatorKind::noisy_naive) return {};
            return IntervalRequest{true, n >= 2};
        }
        if (name == "hoeffding") {
            req.hoeffding = true;
        } else if (name == "normal") {
            req.normal = true;
        } else {
            throw Error("unknown interval method \"" + name + "\"");
        }
    }
    return req;
}

int run_estimate(const EstimateArgs& args) {
    const EstimatorKind kind = estimator_kind_from_string(args.kind);
    if (kind == EstimatorKind::pconf && !args.prior.has_value()) {
        throw Error("--prior is required for kind pconf");
    }
    const ParsedLabels parsed = parse_label_file(args.input, kind);

    std::vector<double> terms;
    BayesEstimate est;
    switch (kind) {
        case EstimatorKind::soft: {
            const SoftLabelSet set{parsed.primary, LabelKind::soft};
            terms = soft_terms(set);
            est = estimate_soft(set);
            break;
        }
        case EstimatorKind::uncertainty: {
            const SoftLabelSet set{parsed.primary, LabelKind::uncertainty};
            terms = uncertainty_terms(set);
            est = estimate_uncertainty(set);
            break;
        }
        case EstimatorKind::noisy_naive: {
            const SignedNoisySet set{parsed.primary, parsed.signs};
            terms = noisy_naive_terms(set);
            est = estimate_noisy_naive(set);
            break;
        }
        case EstimatorKind::noisy_signed: {
            const SignedNoisySet set{parsed.primary, parsed.signs};
            terms = noisy_signed_terms(set);
            est = estimate_noisy_signed(set);
            break;
        }
        case EstimatorKind::pconf: {
            const PconfSet set{parsed.primary, *args.prior};
            terms = pconf_terms(set);
            est = estimate_pconf(set);
            break;
        }
    }
    est = attach_intervals(std::move(est), terms, args.delta,
                           resolve_ci(args.ci, kind, est.n));

    Report report;
    report.command = "estimate";
    report.estimator = to_string(est.kind);
    report.n = est.n;
    report.point = est.point;
    report.intervals = est.intervals;
    report.meta.input = args.input;
    report.meta.delta = args.delta;
    report.meta.prior = args.prior;
    emit(report, args.common);
    return 0;
}

// ---------------------------------------------------------------------------
// synth

struct SynthArgs {
    std::string setup;
    std::string config;
    std::string mode;
    std::vector<std::uint64_t> grid;
    std::uint64_t trials = 10;
    std::uint64_t seed = 1;
    double sigma = 0.4;
    double delta = 0.05;
    std::uint64_t oracle_samples = 10000;
    CommonFlags common;
};

gauss::GaussianSetup resolve_setup(const std::string& name, const std::string& config,
                                   std::string& descriptor) {
    if (!name.empty() && !config.empty()) {
        throw Error("--setup and --config are mutually exclusive");
    }
    if (!name.empty()) {
        descriptor = name;
        return gauss::preset_from_name(name);
    }
    if (!config.empty()) {
        descriptor = config;
        return gauss::load_setup_file(config);
    }
    throw Error("one of --setup or --config is required");
}

Report make_cell(const std::string& label, EstimatorKind kind, std::size_t sample_n,
                 const std::vector<double>& points, double oracle) {
    Report cell;
    cell.command = label;
    cell.estimator = to_string(kind);
    cell.n = sample_n;
    cell.point = kahan_mean(points);
    if (points.size() >= 2) cell.std_error = sample_std_error(points);
    cell.oracle = oracle;
    cell.trial_series = points;
    return cell;
}

int run_synth(const SynthArgs& args) {
    if (args.trials < 1) throw Error("--trials must be at least 1");
    if (!(args.sigma > 0.0)) throw Error("--sigma must be positive");
    if (args.oracle_samples < 1) throw Error("--oracle-samples must be at least 1");
    std::vector<std::uint64_t> grid = args.grid;
    if (grid.empty()) grid = {2, 4, 8, 16, 32, 64, 128, 256, 512, 1028};
    for (std::uint64_t n : grid) {
        if (n < 1) throw Error("grid values must be at least 1");
    }
    std::string descriptor;
    const gauss::GaussianSetup setup = resolve_setup(args.setup, args.config, descriptor);
    const bool noisy = args.mode == "noisy";
    const bool pconf = args.mode == "pconf";

    const double oracle =
        gauss::oracle_bayes_error(setup, args.oracle_samples,
                                  child_seed(args.seed, kOracleStream));

    Report report;
    report.command = "synth";
    report.oracle = oracle;
    report.meta.setup = descriptor;
    report.meta.mode = args.mode;
    report.meta.seed = args.seed;
    report.meta.trials = args.trials;
    report.meta.delta = args.delta;
    report.meta.samples = args.oracle_samples;
    report.meta.grid = grid;
    if (noisy) report.meta.sigma = args.sigma;

    for (std::uint64_t n : grid) {
        const std::uint64_t n_stream = child_seed(args.seed, n);
        std::vector<double> clean_points, naive_points, signed_points, pconf_points;
        for (std::uint64_t t = 0; t < args.trials; ++t) {
            const std::uint64_t trial_seed = child_seed(n_stream, t);
            if (pconf) {
                const PconfSet set =
                    gauss::sample_pconf(setup, n, child_seed(trial_seed, 0));
                pconf_points.push_back(estimate_pconf(set).point);
                continue;
            }
            const auto draws = gauss::sample_pn(setup, n, child_seed(trial_seed, 0));
            const SoftLabelSet soft = gauss::soft_labels_of(draws);
            clean_points.push_back(estimate_soft(soft).point);
            if (noisy) {
                const SignedNoisySet corrupted =
                    noise::corrupt_set(soft, noise::NoiseSpec{args.sigma},
                                       child_seed(trial_seed, 1));
                naive_points.push_back(estimate_noisy_naive(corrupted).point);
                signed_points.push_back(estimate_noisy_signed(corrupted).point);
            }
        }
        if (pconf) {
            Report cell = make_cell("synth_cell", EstimatorKind::pconf,
                                    static_cast<std::size_t>(n), pconf_points, oracle);
            report.series.push_back(std::move(cell));
            continue;
        }
        const auto sample_n = static_cast<std::size_t>(2 * n);
        Report clean = make_cell("synth_cell", EstimatorKind::soft, sample_n,
                                 clean_points, oracle);
        clean.meta.n_per_class = n;
        report.series.push_back(std::move(clean));
        if (noisy) {
            Report naive = make_cell("synth_cell", EstimatorKind::noisy_naive, sample_n,
                                     naive_points, oracle);
            naive.meta.n_per_class = n;
            report.series.push_back(std::move(naive));
            Report corrected = make_cell("synth_cell", EstimatorKind::noisy_signed,
                                         sample_n, signed_points, oracle);
            corrected.meta.n_per_class = n;
            report.series.push_back(std::move(corrected));
        }
    }
    emit(report, args.common);
    return 0;
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
    std::string setup;
    std::string config;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    CommonFlags common;
};

int run_oracle(const OracleArgs& args) {
    if (args.samples < 1) throw Error("--samples must be at least 1");
    std::string descriptor;
    const gauss::GaussianSetup setup = resolve_setup(args.setup, args.config, descriptor);
    Report report;
    report.command = "oracle";
    report.point = gauss::oracle_bayes_error(setup, args.samples,
                                             child_seed(args.seed, kOracleStream));
    try {
        report.analytic = gauss::analytic_bayes_error_isotropic(setup);
    } catch (const NotApplicableError&) {
        // anisotropic or unequal-prior setup: Monte-Carlo value only
    }
    report.meta.setup = descriptor;
    report.meta.seed = args.seed;
    report.meta.samples = args.samples;
    emit(report, args.common);
    return 0;
}

// ---------------------------------------------------------------------------
// ingest

struct IngestArgs {
    std::string votes;
    std::string votes_format = "wide";
    std::string grouping;
    std::string grouping_file;
    std::string emit_kind;
    std::string hard_labels;
    std::string output;
    double delta = 0.05;
    CommonFlags common;
};

ingest::ClassGrouping resolve_grouping(const std::string& name, const std::string& file,
                                       std::string& descriptor) {
    if (!name.empty() && !file.empty()) {
        throw Error("--grouping and --grouping-file are mutually exclusive");
    }
    if (!name.empty()) {
        descriptor = name;
        return ingest::grouping_preset(name);
    }
    if (!file.empty()) {
        descriptor = file;
        return ingest::load_grouping_file(file);
    }
    throw Error("one of --grouping or --grouping-file is required");
}

void write_label_file(const std::string& path, const std::string& value_column,
                      const std::vector<std::string>& ids,
                      const std::vector<double>& values) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file \"" + path + "\"");
    out << "sample_id," << value_column << "\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << ids[i] << "," << shortest_double(values[i]) << "\n";
    }
    if (!out) throw Error("failed writing \"" + path + "\"");
}

int run_ingest(const IngestArgs& args) {
    const auto format = ingest::votes_format_from_string(args.votes_format);
    const auto votes = ingest::load_votes(args.votes, format);
    std::string grouping_descriptor;
    const auto grouping =
        resolve_grouping(args.grouping, args.grouping_file, grouping_descriptor);

    Report report;
    report.command = "ingest";
    report.meta.input = args.votes;
    report.meta.votes_format = args.votes_format;
    report.meta.grouping = grouping_descriptor;
    report.meta.emit = args.emit_kind;
    report.meta.output = args.output;
    report.meta.delta = args.delta;

    if (args.emit_kind == "soft") {
        const SoftLabelSet soft = ingest::soft_labels(votes, grouping);
        std::vector<std::string> ids;
        ids.reserve(votes.size());
        for (const auto& rec : votes) ids.push_back(rec.sample_id);
        write_label_file(args.output, "c", ids, soft.values);
        const auto terms = soft_terms(soft);
        BayesEstimate est = estimate_soft(soft);
        est = attach_intervals(std::move(est), terms, args.delta,
                               IntervalRequest{true, est.n >= 2});
        report.estimator = to_string(est.kind);
        report.n = est.n;
        report.point = est.point;
        report.intervals = est.intervals;
    } else if (args.emit_kind == "pconf") {
        if (args.hard_labels.empty()) {
            throw Error("--hard-labels is required when emitting pconf data");
        }
        const auto hard = ingest::load_hard_labels(args.hard_labels);
        const PconfSet pc = ingest::pconf_subset(votes, grouping, hard);
        const auto indices = ingest::pconf_subset_indices(votes, grouping, hard);
        std::vector<std::string> ids;
        ids.reserve(indices.size());
        for (std::size_t i : indices) ids.push_back(votes[i].sample_id);
        write_label_file(args.output, "r", ids, pc.confidences);
        const auto terms = pconf_terms(pc);
        BayesEstimate est = estimate_pconf(pc);
        est = attach_intervals(std::move(est), terms, args.delta,
                               IntervalRequest{true, est.n >= 2});
        report.estimator = to_string(est.kind);
        report.n = est.n;
        report.point = est.point;
        report.intervals = est.intervals;
        report.meta.prior = pc.class_prior;
    } else {
        throw Error("--emit must be soft or pconf");
    }
    emit(report, args.common);
    return 0;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
    std::string predictions;
    std::string votes;
    std::string votes_format = "wide";
    std::string grouping;
    std::string grouping_file;
    std::uint64_t resamples = 20;
    std::uint64_t seed = 1;
    double delta = 0.05;
    CommonFlags common;
};

int run_eval(const EvalArgs& args) {
    if (args.resamples < 1) throw Error("--resamples must be at least 1");
    const auto format = ingest::votes_format_from_string(args.votes_format);
    const auto votes = ingest::load_votes(args.votes, format);
    const auto preds = ingest::load_predictions(args.predictions);
    std::string grouping_descriptor;
    const auto grouping =
        resolve_grouping(args.grouping, args.grouping_file, grouping_descriptor);
    const SoftLabelSet soft = ingest::soft_labels(votes, grouping);

    std::vector<std::pair<std::string, int>> majority;
    majority.reserve(votes.size());
    for (std::size_t i = 0; i < votes.size(); ++i) {
        majority.emplace_back(votes[i].sample_id, noise::sign_label(soft.values[i]));
    }
    const double majority_error = ingest::score_predictions(preds, majority, grouping);

    std::vector<double> resampled_errors;
    resampled_errors.reserve(args.resamples);
    for (std::uint64_t k = 0; k < args.resamples; ++k) {
        const auto drawn = ingest::resample_hard_labels(soft, child_seed(args.seed, k));
        std::vector<std::pair<std::string, int>> labels;
        labels.reserve(votes.size());
        for (std::size_t i = 0; i < votes.size(); ++i) {
            labels.emplace_back(votes[i].sample_id, drawn[i]);
        }
        resampled_errors.push_back(ingest::score_predictions(preds, labels, grouping));
    }

    const auto terms = soft_terms(soft);
    BayesEstimate est = estimate_soft(soft);
    est = attach_intervals(std::move(est), terms, args.delta,
                           IntervalRequest{true, est.n >= 2});

    Report report;
    report.command = "eval";
    report.meta.input = args.votes;
    report.meta.predictions = args.predictions;
    report.meta.votes_format = args.votes_format;
    report.meta.grouping = grouping_descriptor;
    report.meta.seed = args.seed;
    report.meta.resamples = args.resamples;
    report.meta.delta = args.delta;

    Report maj;
    maj.command = "majority_error";
    maj.n = preds.size();
    maj.point = majority_error;
    report.series.push_back(std::move(maj));

    Report res;
    res.command = "resampled_error";
    res.n = preds.size();
    res.point = kahan_mean(resampled_errors);
    if (resampled_errors.size() >= 2) res.std_error = sample_std_error(resampled_errors);
    res.trial_series = resampled_errors;
    report.series.push_back(std::move(res));

    Report bayes;
    bayes.command = "soft_estimate";
    bayes.estimator = to_string(est.kind);
    bayes.n = est.n;
    bayes.point = est.point;
    bayes.intervals = est.intervals;
    report.series.push_back(std::move(bayes));

    emit(report, args.common);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bayes error estimation from soft, uncertainty, noisy and "
                 "positive-confidence labels"};
    app.require_subcommand(1);

    EstimateArgs estimate_args;
    auto* cmd_estimate = app.add_subcommand(
        "estimate", "Estimate the Bayes error from a label file");
    cmd_estimate->add_option("--input", estimate_args.input, "Label CSV file")->required();
    cmd_estimate
        ->add_option("--kind", estimate_args.kind,
                     "Estimator kind: soft, uncertainty, noisy_naive, noisy_signed, pconf")
        ->required()
        ->check(CLI::IsMember({"soft", "uncertainty", "noisy_naive", "noisy_signed",
                               "pconf"}));
    cmd_estimate->add_option("--prior", estimate_args.prior,
                             "Class prior pi_+ (required for pconf)");
    cmd_estimate->add_option("--delta", estimate_args.delta, "Interval miss probability")
        ->capture_default_str();
    cmd_estimate
        ->add_option("--ci", estimate_args.ci,
                     "Interval methods: auto, none, hoeffding, normal")
        ->delimiter(',')
        ->capture_default_str();
    add_common(cmd_estimate, estimate_args.common);

    SynthArgs synth_args;
    auto* cmd_synth = app.add_subcommand(
        "synth", "Run seeded estimation trials on a synthetic Gaussian setup");
    cmd_synth->add_option("--setup", synth_args.setup, "Named preset: A or B");
    cmd_synth->add_option("--config", synth_args.config, "Custom setup JSON file");
    cmd_synth->add_option("--mode", synth_args.mode, "Data mode: pn, pconf or noisy")
        ->required()
        ->check(CLI::IsMember({"pn", "pconf", "noisy"}));
    cmd_synth
        ->add_option("--grid", synth_args.grid,
                     "Per-class sample sizes (default 2,4,...,512,1028)")
        ->delimiter(',');
    cmd_synth->add_option("--trials", synth_args.trials, "Seeded repetitions per grid point")
        ->capture_default_str();
    cmd_synth->add_option("--seed", synth_args.seed, "Base seed")->capture_default_str();
    cmd_synth->add_option("--sigma", synth_args.sigma, "Label noise sd (mode noisy)")
        ->capture_default_str();
    cmd_synth->add_option("--delta", synth_args.delta, "Interval miss probability")
        ->capture_default_str();
    cmd_synth
        ->add_option("--oracle-samples", synth_args.oracle_samples,
                     "Monte-Carlo sample count for the oracle reference")
        ->capture_default_str();
    add_common(cmd_synth, synth_args.common);

    OracleArgs oracle_args;
    auto* cmd_oracle = app.add_subcommand(
        "oracle", "Monte-Carlo ground-truth Bayes error of a Gaussian setup");
    cmd_oracle->add_option("--setup", oracle_args.setup, "Named preset: A or B");
    cmd_oracle->add_option("--config", oracle_args.config, "Custom setup JSON file");
    cmd_oracle->add_option("--samples", oracle_args.samples, "Monte-Carlo sample count")
        ->capture_default_str();
    cmd_oracle->add_option("--seed", oracle_args.seed, "Base seed")->capture_default_str();
    add_common(cmd_oracle, oracle_args.common);

    IngestArgs ingest_args;
    auto* cmd_ingest = app.add_subcommand(
        "ingest", "Convert vote counts into soft or positive-confidence labels");
    cmd_ingest->add_option("--votes", ingest_args.votes, "Vote-count CSV file")->required();
    cmd_ingest
        ->add_option("--votes-format", ingest_args.votes_format, "Vote CSV layout")
        ->check(CLI::IsMember({"wide", "long"}))
        ->capture_default_str();
    cmd_ingest->add_option("--grouping", ingest_args.grouping,
                           "Preset grouping: animals-vs-artifacts, land-vs-other, "
                           "odd-vs-even, first5-vs-last5");
    cmd_ingest->add_option("--grouping-file", ingest_args.grouping_file,
                           "Custom grouping JSON file");
    cmd_ingest->add_option("--emit", ingest_args.emit_kind, "Label kind to emit")
        ->required()
        ->check(CLI::IsMember({"soft", "pconf"}));
    cmd_ingest->add_option("--hard-labels", ingest_args.hard_labels,
                           "Hard-label CSV (required for --emit pconf)");
    cmd_ingest->add_option("--output", ingest_args.output, "Path of the emitted label file")
        ->required();
    cmd_ingest->add_option("--delta", ingest_args.delta, "Interval miss probability")
        ->capture_default_str();
    add_common(cmd_ingest, ingest_args.common);

    EvalArgs eval_args;
    auto* cmd_eval = app.add_subcommand(
        "eval", "Score a prediction file against vote-derived labels");
    cmd_eval->add_option("--predictions", eval_args.predictions, "Prediction CSV file")
        ->required();
    cmd_eval->add_option("--votes", eval_args.votes, "Vote-count CSV file")->required();
    cmd_eval->add_option("--votes-format", eval_args.votes_format, "Vote CSV layout")
        ->check(CLI::IsMember({"wide", "long"}))
        ->capture_default_str();
    cmd_eval->add_option("--grouping", eval_args.grouping, "Preset grouping name");
    cmd_eval->add_option("--grouping-file", eval_args.grouping_file,
                         "Custom grouping JSON file");
    cmd_eval->add_option("--resamples", eval_args.resamples,
                         "Number of label resampling rounds")
        ->capture_default_str();
    cmd_eval->add_option("--seed", eval_args.seed, "Base seed")->capture_default_str();
    cmd_eval->add_option("--delta", eval_args.delta, "Interval miss probability")
        ->capture_default_str();
    add_common(cmd_eval, eval_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_estimate)) return run_estimate(estimate_args);
        if (app.got_subcommand(cmd_synth)) return run_synth(synth_args);
        if (app.got_subcommand(cmd_oracle)) return run_oracle(oracle_args);
        if (app.got_subcommand(cmd_ingest)) return run_ingest(ingest_args);
        if (app.got_subcommand(cmd_eval)) return run_eval(eval_args);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
