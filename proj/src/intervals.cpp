#include "bayeserr/intervals.hpp"

#include <algorithm>
#include <cmath>

#include "bayeserr/errors.hpp"
#include "bayeserr/kahan.hpp"
#include "bayeserr/normal.hpp"

namespace bayeserr {

namespace {

void check_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidDeltaError(delta);
}

Interval clamp_interval(IntervalMethod method, double delta, double lo, double hi,
                        ValueRange range) {
    return Interval{method, delta, std::max(lo, range.lo), std::min(hi, range.hi)};
}

} // namespace

double hoeffding_halfwidth(std::size_t n, double delta, EstimatorKind kind) {
    if (n < 1) throw EmptyDatasetError("hoeffding_halfwidth requires n >= 1");
    check_delta(delta);
    switch (kind) {
        case EstimatorKind::soft:
        case EstimatorKind::uncertainty:
            return std::sqrt(std::log(2.0 / delta) / (8.0 * static_cast<double>(n)));
        case EstimatorKind::noisy_signed:
        case EstimatorKind::pconf:
            return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(n)));
        case EstimatorKind::noisy_naive:
            throw UnsupportedKindError(
                "no Hoeffding bound for the naive noisy estimator: it is biased");
    }
    throw UnsupportedKindError("unknown estimator kind");
}

MeanHalfwidth normal_mean_halfwidth(std::span<const double> terms, double delta) {
    check_delta(delta);
    const std::size_t n = terms.size();
    if (n < 2) throw TooFewSamplesError(n);
    const double mean = kahan_mean(terms);
    KahanSum sq;
    for (double t : terms) {
        const double d = t - mean;
        sq.add(d * d);
    }
    const double sd = std::sqrt(std::max(0.0, sq.value() / static_cast<double>(n - 1)));
    const double z = norm_quantile(1.0 - delta / 2.0);
    return MeanHalfwidth{mean, z * sd / std::sqrt(static_cast<double>(n))};
}

Interval normal_interval(std::span<const double> terms, double delta, ValueRange range) {
    const MeanHalfwidth mh = normal_mean_halfwidth(terms, delta);
    return clamp_interval(IntervalMethod::normal, delta, mh.mean - mh.halfwidth,
                          mh.mean + mh.halfwidth, range);
}

BayesEstimate attach_intervals(BayesEstimate estimate, std::span<const double> terms,
                               double delta, IntervalRequest methods) {
    if (!methods.hoeffding && !methods.normal) return estimate;
    if (estimate.kind == EstimatorKind::noisy_naive) {
        throw UnsupportedKindError(
            "no confidence interval for the naive noisy estimator: it is biased");
    }
    const ValueRange range = estimator_range(estimate.kind, estimate.class_prior);
    if (methods.hoeffding) {
        const double hw = hoeffding_halfwidth(estimate.n, delta, estimate.kind);
        estimate.intervals.push_back(clamp_interval(IntervalMethod::hoeffding, delta,
                                                    estimate.point - hw,
                                                    estimate.point + hw, range));
    }
    if (methods.normal) {
        estimate.intervals.push_back(normal_interval(terms, delta, range));
    }
    return estimate;
}

} // namespace bayeserr
