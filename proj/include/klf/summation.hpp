#pragma once

#include <cmath>
#include <span>

namespace klf {

// Neumaier's variant of Kahan summation. Used per lattice shell/slice so
// that shell totals do not depend on accumulation length.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_total(std::span<const double> parts) noexcept {
  CompensatedSum acc;
  for (double p : parts) acc.add(p);
  return acc.value();
}

}  // namespace klf
