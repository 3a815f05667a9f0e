#include "bayeserr/estimate.hpp"

#include <algorithm>

#include "bayeserr/errors.hpp"
#include "bayeserr/kahan.hpp"

namespace bayeserr {

std::string to_string(EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::soft: return "soft";
        case EstimatorKind::uncertainty: return "uncertainty";
        case EstimatorKind::noisy_naive: return "noisy_naive";
        case EstimatorKind::noisy_signed: return "noisy_signed";
        case EstimatorKind::pconf: return "pconf";
    }
    return "unknown";
}

EstimatorKind estimator_kind_from_string(const std::string& name) {
    if (name == "soft") return EstimatorKind::soft;
    if (name == "uncertainty") return EstimatorKind::uncertainty;
    if (name == "noisy_naive") return EstimatorKind::noisy_naive;
    if (name == "noisy_signed") return EstimatorKind::noisy_signed;
    if (name == "pconf") return EstimatorKind::pconf;
    throw UnknownPresetError(name);
}

std::string to_string(IntervalMethod method) {
    switch (method) {
        case IntervalMethod::hoeffding: return "hoeffding";
        case IntervalMethod::normal: return "normal";
    }
    return "unknown";
}

IntervalMethod interval_method_from_string(const std::string& name) {
    if (name == "hoeffding") return IntervalMethod::hoeffding;
    if (name == "normal") return IntervalMethod::normal;
    throw UnknownPresetError(name);
}

ValueRange estimator_range(EstimatorKind kind, double class_prior) {
    switch (kind) {
        case EstimatorKind::soft:
        case EstimatorKind::uncertainty:
        case EstimatorKind::noisy_naive:
            return {0.0, 0.5};
        case EstimatorKind::noisy_signed:
            return {0.0, 1.0};
        case EstimatorKind::pconf:
            return {0.0, class_prior};
    }
    return {0.0, 1.0};
}

namespace {

void require_nonempty(std::size_t n) {
    if (n == 0) throw EmptyDatasetError();
}

BayesEstimate from_terms(const std::vector<double>& terms, EstimatorKind kind,
                         double class_prior = 1.0) {
    BayesEstimate est;
    est.point = kahan_mean(terms);
    est.n = terms.size();
    est.kind = kind;
    est.class_prior = class_prior;
    return est;
}

} // namespace

std::vector<double> soft_terms(const SoftLabelSet& labels) {
    require_nonempty(labels.size());
    std::vector<double> terms;
    terms.reserve(labels.size());
    for (std::size_t i = 0; i < labels.values.size(); ++i) {
        const double c = labels.values[i];
        if (!(c >= 0.0 && c <= 1.0)) throw InvalidLabelError(i, c, "[0, 1]");
        terms.push_back(std::min(c, 1.0 - c));
    }
    return terms;
}

std::vector<double> uncertainty_terms(const SoftLabelSet& labels) {
    require_nonempty(labels.size());
    std::vector<double> terms;
    terms.reserve(labels.size());
    for (std::size_t i = 0; i < labels.values.size(); ++i) {
        const double u = labels.values[i];
        if (!(u >= 0.0 && u <= 0.5)) throw InvalidLabelError(i, u, "[0, 0.5]");
        terms.push_back(u);
    }
    return terms;
}

std::vector<double> noisy_naive_terms(const SignedNoisySet& data) {
    require_nonempty(data.size());
    if (data.noisy_values.size() != data.signs.size()) {
        throw LengthMismatchError(data.noisy_values.size(), data.signs.size());
    }
    std::vector<double> terms;
    terms.reserve(data.size());
    for (std::size_t i = 0; i < data.noisy_values.size(); ++i) {
        const double u = data.noisy_values[i];
        if (!(u >= 0.0 && u <= 1.0)) throw InvalidLabelError(i, u, "[0, 1]");
        terms.push_back(std::min(u, 1.0 - u));
    }
    return terms;
}

std::vector<double> noisy_signed_terms(const SignedNoisySet& data) {
    require_nonempty(data.size());
    if (data.noisy_values.size() != data.signs.size()) {
        throw LengthMismatchError(data.noisy_values.size(), data.signs.size());
    }
    std::vector<double> terms;
    terms.reserve(data.size());
    for (std::size_t i = 0; i < data.noisy_values.size(); ++i) {
        const double u = data.noisy_values[i];
        if (!(u >= 0.0 && u <= 1.0)) throw InvalidLabelError(i, u, "[0, 1]");
        if (data.signs[i] == 1) {
            terms.push_back(1.0 - u);
        } else if (data.signs[i] == -1) {
            terms.push_back(u);
        } else {
            throw InvalidSignError(i, data.signs[i]);
        }
    }
    return terms;
}

std::vector<double> pconf_terms(const PconfSet& data) {
    require_nonempty(data.size());
    if (!(data.class_prior > 0.0 && data.class_prior <= 1.0)) {
        throw InvalidPriorError(data.class_prior);
    }
    std::vector<double> terms;
    terms.reserve(data.size());
    for (std::size_t i = 0; i < data.confidences.size(); ++i) {
        const double r = data.confidences[i];
        if (!(r >= 0.0 && r <= 1.0)) throw InvalidLabelError(i, r, "[0, 1]");
        // r = 0 contributes pi_+ * (1 - 0) without touching 1/r.
        const double inner = (r == 0.0) ? 0.0 : std::max(0.0, 2.0 - 1.0 / r);
        terms.push_back(data.class_prior * (1.0 - inner));
    }
    return terms;
}

BayesEstimate estimate_soft(const SoftLabelSet& labels) {
    if (labels.kind != LabelKind::soft) {
        throw UnsupportedKindError("estimate_soft requires soft labels, not uncertainty labels");
    }
    return from_terms(soft_terms(labels), EstimatorKind::soft);
}

BayesEstimate estimate_uncertainty(const SoftLabelSet& labels) {
    if (labels.kind != LabelKind::uncertainty) {
        throw UnsupportedKindError("estimate_uncertainty requires uncertainty labels");
    }
    return from_terms(uncertainty_terms(labels), EstimatorKind::uncertainty);
}

BayesEstimate estimate_noisy_naive(const SignedNoisySet& data) {
    return from_terms(noisy_naive_terms(data), EstimatorKind::noisy_naive);
}

BayesEstimate estimate_noisy_signed(const SignedNoisySet& data) {
    return from_terms(noisy_signed_terms(data), EstimatorKind::noisy_signed);
}

BayesEstimate estimate_pconf(const PconfSet& data) {
    return from_terms(pconf_terms(data), EstimatorKind::pconf, data.class_prior);
}

double estimate_prior(const SoftLabelSet& labels) {
    if (labels.kind == LabelKind::uncertainty) {
        throw UnsupportedKindError(
            "the class prior cannot be recovered from uncertainty labels");
    }
    require_nonempty(labels.size());
    KahanSum acc;
    for (std::size_t i = 0; i < labels.values.size(); ++i) {
        const double c = labels.values[i];
        if (!(c >= 0.0 && c <= 1.0)) throw InvalidLabelError(i, c, "[0, 1]");
        acc.add(c);
    }
    return acc.value() / static_cast<double>(labels.size());
}

} // namespace bayeserr
