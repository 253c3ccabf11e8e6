#pragma once

#if defined(__FAST_MATH__)
#error "fast-math would defeat compensated summation"
#endif

#include <cmath>

namespace hardy {

/// Neumaier-compensated accumulator. The carry also absorbs the case
/// where the addend dominates the running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace hardy
