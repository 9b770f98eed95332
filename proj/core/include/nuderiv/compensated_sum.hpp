#pragma once

#include <cmath>
#include <concepts>

namespace nuderiv {

/// Neumaier's variant of Kahan summation.
///
/// Unlike plain Kahan it stays accurate when an addend is larger in magnitude
/// than the running sum, which happens constantly in alternating series whose
/// partial sums cancel.
template <std::floating_point Real>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(Real initial) : sum_{initial} {}

  constexpr CompensatedSum& operator+=(Real value) {
    const Real t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr CompensatedSum& operator-=(Real value) { return *this += -value; }

  [[nodiscard]] constexpr Real value() const { return sum_ + compensation_; }
  constexpr explicit operator Real() const { return value(); }

 private:
  Real sum_{0};
  Real compensation_{0};
};

}  // namespace nuderiv
