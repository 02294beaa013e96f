#pragma once

#include <cmath>

namespace specdist {

enum class summation { plain, compensated };

/// Running sum in index order; the compensated mode is Neumaier's variant
/// of Kahan summation and exists to check the plain mode's roundoff.
class accumulator {
public:
    explicit accumulator(summation mode = summation::plain) : mode_(mode) {}

    void add(double x) {
        if (mode_ == summation::plain) {
            sum_ += x;
            return;
        }
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + carry_; }

private:
    summation mode_;
    double sum_ = 0.0;
    double carry_ = 0.0;
};

} // namespace specdist
