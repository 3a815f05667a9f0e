// Confidence intervals for the estimators: the distribution-free Hoeffding
// bound with the per-kind range constant, and a normal approximation built
// from the per-sample terms. Both are clamped to the estimator's valid range.
#pragma once

#include <cstddef>
#include <span>

#include "bayeserr/estimate.hpp"

namespace bayeserr {

// Hoeffding half-width at confidence 1 - delta:
//   soft/uncertainty terms span a range of 1/2 -> sqrt(log(2/delta) / (8n)),
//   noisy_signed/pconf terms span a range of 1 -> sqrt(log(2/delta) / (2n)).
// Rejected for noisy_naive: the estimator is biased, so no coverage statement
// would hold.
double hoeffding_halfwidth(std::size_t n, double delta, EstimatorKind kind);

struct MeanHalfwidth {
    double mean = 0.0;
    double halfwidth = 0.0;
};

// Unclamped normal-approximation interval: mean +/- z_{1-delta/2} * sd/sqrt(n)
// with the sample standard deviation of the terms. Requires n >= 2.
MeanHalfwidth normal_mean_halfwidth(std::span<const double> terms, double delta);

// Normal interval clamped to [range.lo, range.hi].
Interval normal_interval(std::span<const double> terms, double delta, ValueRange range);

// Requested interval methods for attach_intervals.
struct IntervalRequest {
    bool hoeffding = false;
    bool normal = false;
};

// Appends the requested intervals to the estimate. `terms` must be the
// estimate's own per-sample contributions (their mean is the point). Any
// request on a noisy_naive estimate is rejected.
BayesEstimate attach_intervals(BayesEstimate estimate, std::span<const double> terms,
                               double delta, IntervalRequest methods);

} // namespace bayeserr
