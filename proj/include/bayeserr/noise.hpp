// Mean-zero truncated-Gaussian label noise and sign-label derivation: turns
// clean soft labels into SignedNoisySet inputs for the noisy estimators.
#pragma once

#include <cstdint>

#include "bayeserr/labels.hpp"
#include "bayeserr/rng.hpp"

namespace bayeserr::noise {

struct NoiseSpec {
    // Standard deviation of the untruncated Gaussian.
    double sigma = 0.4;
};

// Draws from a Gaussian with mean c and sd spec.sigma truncated symmetrically
// to [c - a, c + a] with a = min(c, 1 - c). The symmetric truncation keeps
// E[u | c] = c and u in [0, 1]; c in {0, 1} returns c exactly. Rejection
// sampling from the untruncated Gaussian, switching to inverse-CDF sampling
// when a/sigma < 0.05 where the acceptance rate degrades.
double perturb(double c, const NoiseSpec& spec, Rng& rng);
double perturb(double c, const NoiseSpec& spec, std::uint64_t rng_seed);

// +1 if c > 0.5, -1 if c < 0.5, +1 at exactly 0.5 (tie rule).
int sign_label(double c);

// Element i of the result carries u_i = perturb(c_i) and s_i = sign_label(c_i).
// Signs come from the clean posterior, matching s_i = sign[p(y=+1|x_i) - 0.5].
SignedNoisySet corrupt_set(const SoftLabelSet& labels, const NoiseSpec& spec,
                           std::uint64_t rng_seed);

} // namespace bayeserr::noise
