#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bayeserr/errors.hpp"
#include "bayeserr/report.hpp"

using namespace bayeserr;

namespace {

Report sample_report() {
    Report cell;
    cell.command = "synth_cell";
    cell.estimator = "soft";
    cell.n = 128;
    cell.point = 0.059782905322905;
    cell.std_error = 0.00328219;
    cell.oracle = 0.0558962694200001;
    cell.trial_series = {0.0587541, 0.0672575, 0.0617332};
    cell.meta.n_per_class = 64;

    Report report;
    report.command = "synth";
    report.oracle = 0.0558962694200001;
    report.meta.setup = "A";
    report.meta.mode = "noisy";
    report.meta.seed = 11;
    report.meta.trials = 3;
    report.meta.sigma = 0.4;
    report.meta.delta = 0.05;
    report.meta.grid = {64};
    report.series.push_back(cell);

    Report est;
    est.command = "estimate";
    est.estimator = "pconf";
    est.n = 100;
    est.point = 1.0 / 75.0;
    est.intervals = {{IntervalMethod::hoeffding, 0.05, 0.0, 0.2},
                     {IntervalMethod::normal, 0.05, 0.01, 0.016}};
    est.meta.prior = 0.5;
    est.meta.input = "labels.csv";
    report.series.push_back(est);
    return report;
}

} // namespace

TEST_CASE("full-precision JSON round-trips losslessly") {
    const Report original = sample_report();
    const std::string text = report_to_json(original, ReportFormat{0});
    const Report back = report_from_json(text);
    CHECK(back == original);
    // and the serialization itself is stable
    CHECK(report_to_json(back, ReportFormat{0}) == text);
}

TEST_CASE("default precision is six significant digits and idempotent") {
    const Report original = sample_report();
    const std::string text = report_to_json(original);
    CHECK(text.find("0.0597829") != std::string::npos);
    CHECK(text.find("0.059782905322905") == std::string::npos);
    const Report rounded = report_from_json(text);
    CHECK(report_to_json(rounded) == text);
}

TEST_CASE("round_sig") {
    CHECK(round_sig(0.123456789, 6) == 0.123457);
    CHECK(round_sig(123456789.0, 6) == 123457000.0);
    CHECK(round_sig(0.0, 6) == 0.0);
    CHECK(round_sig(-1.0 / 3.0, 3) == -0.333);
}

TEST_CASE("csv flattens leaf reports with one row per interval") {
    const std::string csv = report_to_csv(sample_report());
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < csv.size()) {
        const auto end = csv.find('\n', start);
        lines.push_back(csv.substr(start, end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    REQUIRE(lines.size() >= 4);
    CHECK(lines[0] ==
          "command,estimator,n,point,std_error,oracle,analytic,ci_method,ci_delta,"
          "ci_lower,ci_upper");
    CHECK(lines[1] == "synth_cell,soft,128,0.0597829,0.00328219,0.0558963,,,,,");
    CHECK(lines[2] == "estimate,pconf,100,0.0133333,,,,hoeffding,0.05,0,0.2");
    CHECK(lines[3] == "estimate,pconf,100,0.0133333,,,,normal,0.05,0.01,0.016");
}

TEST_CASE("malformed report text is rejected") {
    CHECK_THROWS_AS(report_from_json("not json"), ParseError);
    CHECK_THROWS_AS(report_from_json(R"({"command": "estimate"})"), ParseError);
}
