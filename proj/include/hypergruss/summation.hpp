#pragma once

#include <cmath>

namespace hypergruss {

// Neumaier-compensated accumulator: each addition's rounding error is caught
// in a separate compensation term and folded in at the end.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace hypergruss
