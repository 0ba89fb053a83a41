#pragma once

#include "gmprune/types.hpp"

namespace gmprune {

/// Neumaier-compensated scalar accumulator. Keeps a running correction term
/// so that sums of n doubles lose O(1) ulps instead of O(n).
class CompensatedSum {
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

/// Column-wise compensated sum over the rows of X.
Vector compensated_colwise_sum(const Matrix& X);

/// Column-wise compensated mean over the rows of X.
Vector compensated_colwise_mean(const Matrix& X);

}  // namespace gmprune
