#pragma once

namespace bayeserr {

// Standard normal CDF.
double norm_cdf(double x);

// Standard normal quantile (inverse CDF), Wichura's AS 241 double-precision
// branch. p must lie in (0, 1).
double norm_quantile(double p);

} // namespace bayeserr
