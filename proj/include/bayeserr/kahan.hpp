#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace bayeserr {

// Compensated (Neumaier) accumulator. All estimator sums run through this in
// input order; the compensation term keeps the accumulated error below 1e-12
// for up to 1e7 terms of magnitude <= 1.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double kahan_sum(std::span<const double> values) {
    KahanSum acc;
    for (double v : values) acc.add(v);
    return acc.value();
}

inline double kahan_mean(std::span<const double> values) {
    return kahan_sum(values) / static_cast<double>(values.size());
}

} // namespace bayeserr
