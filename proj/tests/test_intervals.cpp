#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bayeserr/errors.hpp"
#include "bayeserr/intervals.hpp"
#include "bayeserr/normal.hpp"

using namespace bayeserr;

TEST_CASE("hoeffding half-width matches the closed forms") {
    // sqrt(log(40)/80000) at n = 10000, delta = 0.05
    CHECK(hoeffding_halfwidth(10000, 0.05, EstimatorKind::soft) ==
          doctest::Approx(0.006790507578703098).epsilon(1e-12));
    CHECK(hoeffding_halfwidth(10000, 0.05, EstimatorKind::uncertainty) ==
          hoeffding_halfwidth(10000, 0.05, EstimatorKind::soft));
    // pconf and signed use the 2n denominator: exactly twice the soft width
    CHECK(hoeffding_halfwidth(10000, 0.05, EstimatorKind::pconf) ==
          doctest::Approx(2.0 * hoeffding_halfwidth(10000, 0.05, EstimatorKind::soft))
              .epsilon(1e-14));
    CHECK(hoeffding_halfwidth(10000, 0.05, EstimatorKind::noisy_signed) ==
          hoeffding_halfwidth(10000, 0.05, EstimatorKind::pconf));
    CHECK(hoeffding_halfwidth(8, 0.05, EstimatorKind::soft) ==
          doctest::Approx(std::sqrt(std::log(40.0) / 64.0)).epsilon(1e-15));
}

TEST_CASE("hoeffding half-width validation") {
    CHECK_THROWS_AS(hoeffding_halfwidth(10, 2.0, EstimatorKind::soft), InvalidDeltaError);
    CHECK_THROWS_AS(hoeffding_halfwidth(10, 0.0, EstimatorKind::soft), InvalidDeltaError);
    CHECK_THROWS_AS(hoeffding_halfwidth(0, 0.05, EstimatorKind::soft), EmptyDatasetError);
    CHECK_THROWS_AS(hoeffding_halfwidth(10, 0.05, EstimatorKind::noisy_naive),
                    UnsupportedKindError);
}

TEST_CASE("doubling n shrinks the hoeffding half-width by exactly 1/sqrt(2)") {
    for (std::size_t n : {1ul, 7ul, 64ul, 4096ul}) {
        const double ratio = hoeffding_halfwidth(2 * n, 0.05, EstimatorKind::soft) /
                             hoeffding_halfwidth(n, 0.05, EstimatorKind::soft);
        CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    }
}

TEST_CASE("normal interval on hand-computed values") {
    SUBCASE("equal values give a zero-width interval") {
        const std::vector<double> terms = {0.3, 0.3, 0.3};
        const auto mh = normal_mean_halfwidth(terms, 0.05);
        CHECK(mh.mean == doctest::Approx(0.3).epsilon(1e-15));
        CHECK(mh.halfwidth == 0.0);
    }
    SUBCASE("values {0, 1}: sample sd = 0.70711, half-width 0.980") {
        const std::vector<double> terms = {0.0, 1.0};
        const auto mh = normal_mean_halfwidth(terms, 0.05);
        CHECK(mh.mean == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(mh.halfwidth == doctest::Approx(0.9799819922700273).epsilon(1e-9));
        // clamped to the noisy_signed range [0, 1]
        const auto iv = normal_interval(terms, 0.05, estimator_range(EstimatorKind::noisy_signed));
        CHECK(iv.lower == 0.0);
        CHECK(iv.upper == 1.0);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(normal_mean_halfwidth(std::vector<double>{0.5}, 0.05),
                        TooFewSamplesError);
        CHECK_THROWS_AS(normal_mean_halfwidth(std::vector<double>{0.5, 0.6}, 1.5),
                        InvalidDeltaError);
    }
}

TEST_CASE("normal quantile and cdf agree with reference values") {
    CHECK(norm_quantile(0.975) == doctest::Approx(1.9599639845400545).epsilon(1e-12));
    CHECK(norm_quantile(0.5) == doctest::Approx(0.0));
    CHECK(norm_cdf(-1.5811388300841898) == doctest::Approx(0.05692314900332901).epsilon(1e-12));
    CHECK(norm_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    // cdf(quantile(p)) = p across the unit interval
    for (double p = 0.001; p < 0.9995; p += 0.0007) {
        CHECK(norm_cdf(norm_quantile(p)) == doctest::Approx(p).epsilon(1e-11));
    }
    CHECK_THROWS_AS(norm_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(norm_quantile(1.0), std::domain_error);
}

TEST_CASE("attach_intervals") {
    const auto soft = make_soft({0.2, 0.9, 0.4, 0.7, 0.1, 0.5, 0.6, 0.35});
    const auto terms = soft_terms(soft);
    auto est = estimate_soft(soft);

    SUBCASE("empty request leaves the estimate unchanged") {
        const auto unchanged = attach_intervals(est, terms, 0.05, {});
        CHECK(unchanged.intervals.empty());
        CHECK(unchanged.point == est.point);
    }
    SUBCASE("hoeffding at n = 8 uses the closed form and clamps") {
        const auto with = attach_intervals(est, terms, 0.05, IntervalRequest{true, false});
        REQUIRE(with.intervals.size() == 1);
        const double hw = std::sqrt(std::log(40.0) / 64.0);
        CHECK(with.intervals[0].method == IntervalMethod::hoeffding);
        CHECK(with.intervals[0].lower == doctest::Approx(std::max(0.0, est.point - hw)));
        CHECK(with.intervals[0].upper == doctest::Approx(std::min(0.5, est.point + hw)));
        CHECK(with.intervals[0].lower <= with.point);
        CHECK(with.intervals[0].upper >= with.point);
    }
    SUBCASE("both methods append in order") {
        const auto with = attach_intervals(est, terms, 0.05, IntervalRequest{true, true});
        REQUIRE(with.intervals.size() == 2);
        CHECK(with.intervals[0].method == IntervalMethod::hoeffding);
        CHECK(with.intervals[1].method == IntervalMethod::normal);
        CHECK(with.intervals[1].lower >= 0.0);
        CHECK(with.intervals[1].upper <= 0.5);
    }
    SUBCASE("naive noisy estimates never get intervals") {
        const auto data = make_signed_noisy({0.4, 0.6}, {1, -1});
        auto naive = estimate_noisy_naive(data);
        CHECK_THROWS_AS(
            attach_intervals(naive, noisy_naive_terms(data), 0.05, IntervalRequest{true, false}),
            UnsupportedKindError);
        CHECK_THROWS_AS(
            attach_intervals(naive, noisy_naive_terms(data), 0.05, IntervalRequest{false, true}),
            UnsupportedKindError);
        const auto none = attach_intervals(naive, noisy_naive_terms(data), 0.05, {});
        CHECK(none.intervals.empty());
    }
    SUBCASE("pconf interval clamps to [0, prior]") {
        const auto pc = make_pconf({0.5, 0.55, 0.6, 0.45}, 0.3);
        auto pest = estimate_pconf(pc);
        const auto with =
            attach_intervals(pest, pconf_terms(pc), 0.05, IntervalRequest{true, true});
        for (const auto& iv : with.intervals) {
            CHECK(iv.lower >= 0.0);
            CHECK(iv.upper <= 0.3);
            CHECK(iv.lower <= pest.point);
            CHECK(iv.upper >= pest.point);
        }
    }
}
