#include "bayeserr/noise.hpp"

#include <algorithm>
#include <cmath>

#include "bayeserr/errors.hpp"
#include "bayeserr/normal.hpp"

namespace bayeserr::noise {

namespace {

void check_spec(const NoiseSpec& spec) {
    if (!(spec.sigma > 0.0)) {
        throw InvalidSetupError("noise sigma must be positive");
    }
}

} // namespace

double perturb(double c, const NoiseSpec& spec, Rng& rng) {
    check_spec(spec);
    if (!(c >= 0.0 && c <= 1.0)) throw InvalidLabelError(0, c, "[0, 1]");
    const double a = std::min(c, 1.0 - c);
    if (a == 0.0) return c; // degenerate truncation at the endpoints
    if (a / spec.sigma < 0.05) {
        const double hi = norm_cdf(a / spec.sigma);
        const double lo = 1.0 - hi;
        const double p = lo + rng.uniform01() * (hi - lo);
        const double u = c + spec.sigma * norm_quantile(p);
        return std::clamp(u, c - a, c + a);
    }
    for (;;) {
        const double u = c + spec.sigma * rng.normal();
        if (u >= c - a && u <= c + a) return u;
    }
}

double perturb(double c, const NoiseSpec& spec, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return perturb(c, spec, rng);
}

int sign_label(double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw InvalidLabelError(0, c, "[0, 1]");
    return (c >= 0.5) ? 1 : -1;
}

SignedNoisySet corrupt_set(const SoftLabelSet& labels, const NoiseSpec& spec,
                           std::uint64_t rng_seed) {
    check_spec(spec);
    if (labels.kind != LabelKind::soft) {
        throw UnsupportedKindError("corrupt_set requires soft labels");
    }
    Rng rng(rng_seed);
    SignedNoisySet out;
    out.noisy_values.reserve(labels.size());
    out.signs.reserve(labels.size());
    for (std::size_t i = 0; i < labels.values.size(); ++i) {
        const double c = labels.values[i];
        if (!(c >= 0.0 && c <= 1.0)) throw InvalidLabelError(i, c, "[0, 1]");
        out.noisy_values.push_back(perturb(c, spec, rng));
        out.signs.push_back(sign_label(c));
    }
    return out;
}

} // namespace bayeserr::noise
