#pragma once

#include <cstddef>
#include <vector>

namespace bayeserr {

enum class LabelKind {
    soft,        // positive-class posteriors, values in [0, 1]
    uncertainty, // min-class posteriors, values in [0, 0.5]
};

// Per-sample positive-class posteriors (or uncertainty values). Plain value
// type; the estimators validate the range invariants on use so that a bad
// element is reported with its index.
struct SoftLabelSet {
    std::vector<double> values;
    LabelKind kind = LabelKind::soft;

    std::size_t size() const { return values.size(); }
};

SoftLabelSet make_soft(std::vector<double> values);
SoftLabelSet make_uncertainty(std::vector<double> values);

// Noisy soft labels paired with sign labels s_i in {+1, -1}.
struct SignedNoisySet {
    std::vector<double> noisy_values;
    std::vector<int> signs;

    std::size_t size() const { return noisy_values.size(); }
};

SignedNoisySet make_signed_noisy(std::vector<double> noisy_values, std::vector<int> signs);

// Positive-confidence values r_i for samples drawn from the positive
// class-conditional, plus the class prior pi_+.
struct PconfSet {
    std::vector<double> confidences;
    double class_prior = 1.0;

    std::size_t size() const { return confidences.size(); }
};

PconfSet make_pconf(std::vector<double> confidences, double class_prior);

} // namespace bayeserr
