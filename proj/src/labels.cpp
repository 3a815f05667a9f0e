#include "bayeserr/labels.hpp"

#include "bayeserr/errors.hpp"

namespace bayeserr {

namespace {

void check_range(const std::vector<double>& values, double hi, const char* constraint) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 0.0 && values[i] <= hi)) {
            throw InvalidLabelError(i, values[i], constraint);
        }
    }
}

} // namespace

SoftLabelSet make_soft(std::vector<double> values) {
    check_range(values, 1.0, "[0, 1]");
    return SoftLabelSet{std::move(values), LabelKind::soft};
}

SoftLabelSet make_uncertainty(std::vector<double> values) {
    check_range(values, 0.5, "[0, 0.5]");
    return SoftLabelSet{std::move(values), LabelKind::uncertainty};
}

SignedNoisySet make_signed_noisy(std::vector<double> noisy_values, std::vector<int> signs) {
    if (noisy_values.size() != signs.size()) {
        throw LengthMismatchError(noisy_values.size(), signs.size());
    }
    check_range(noisy_values, 1.0, "[0, 1]");
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1) throw InvalidSignError(i, signs[i]);
    }
    return SignedNoisySet{std::move(noisy_values), std::move(signs)};
}

PconfSet make_pconf(std::vector<double> confidences, double class_prior) {
    check_range(confidences, 1.0, "[0, 1]");
    if (!(class_prior > 0.0 && class_prior <= 1.0)) throw InvalidPriorError(class_prior);
    return PconfSet{std::move(confidences), class_prior};
}

} // namespace bayeserr
