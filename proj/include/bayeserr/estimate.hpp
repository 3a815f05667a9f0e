// The four Bayes error estimators plus prior recovery. Each estimator is the
// mean (compensated, input order) of bounded per-sample terms; the *_terms
// functions expose those terms so confidence intervals can be built on them.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bayeserr/labels.hpp"

namespace bayeserr {

enum class EstimatorKind {
    soft,
    uncertainty,
    noisy_naive,
    noisy_signed,
    pconf,
};

std::string to_string(EstimatorKind kind);
EstimatorKind estimator_kind_from_string(const std::string& name);

enum class IntervalMethod {
    hoeffding,
    normal,
};

std::string to_string(IntervalMethod method);
IntervalMethod interval_method_from_string(const std::string& name);

struct Interval {
    IntervalMethod method = IntervalMethod::hoeffding;
    double delta = 0.05;
    double lower = 0.0;
    double upper = 0.0;

    bool operator==(const Interval&) const = default;
};

struct BayesEstimate {
    double point = 0.0;
    std::size_t n = 0;
    EstimatorKind kind = EstimatorKind::soft;
    // Class prior behind a pconf estimate; 1.0 otherwise. Determines the
    // upper end of the estimate's valid range.
    double class_prior = 1.0;
    std::vector<Interval> intervals;
};

// Valid range [lo, hi] of an estimate of the given kind; intervals are
// clamped to it. pconf ranges over [0, class_prior].
struct ValueRange {
    double lo = 0.0;
    double hi = 0.0;
};
ValueRange estimator_range(EstimatorKind kind, double class_prior = 1.0);

// Per-sample terms. Mean of the terms equals the corresponding estimate.
std::vector<double> soft_terms(const SoftLabelSet& labels);
std::vector<double> uncertainty_terms(const SoftLabelSet& labels);
std::vector<double> noisy_naive_terms(const SignedNoisySet& data);
std::vector<double> noisy_signed_terms(const SignedNoisySet& data);
std::vector<double> pconf_terms(const PconfSet& data);

// beta_hat = mean of min(c_i, 1 - c_i).
BayesEstimate estimate_soft(const SoftLabelSet& labels);

// Mean of uncertainty labels c'_i in [0, 0.5].
BayesEstimate estimate_uncertainty(const SoftLabelSet& labels);

// Mean of min(u_i, 1 - u_i) on noisy labels. Biased under label noise; kept
// to make the bias measurable. Sign labels are ignored.
BayesEstimate estimate_noisy_naive(const SignedNoisySet& data);

// Sign-corrected estimator: mean of (1 - u_i) on the s_i = +1 side and u_i on
// the s_i = -1 side. Unbiased under conditionally mean-zero label noise.
BayesEstimate estimate_noisy_signed(const SignedNoisySet& data);

// pi_+ * (1 - mean of max(0, 2 - 1/r_i)) over positive-confidence values.
// r_i = 0 contributes a zero term without evaluating 1/r.
BayesEstimate estimate_pconf(const PconfSet& data);

// Class prior recovered as the mean of soft labels. Rejected for uncertainty
// labels, from which the prior is unrecoverable.
double estimate_prior(const SoftLabelSet& labels);

} // namespace bayeserr
