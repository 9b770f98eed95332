#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nuderiv/errors.hpp"
#include "nuderiv/table.hpp"

namespace nuderiv {

/// Rising factorial (t)_m = t (t+1) ... (t+m-1).
[[nodiscard]] double pochhammer(double t, int m);

// P_m^(k)(t) = (1/k!) d^k/dt^k (t)_m and Q_m^(k)(t) = (1/k!) d^k/dt^k 1/(t)_m.
// Negative m or k is a contract violation (std::invalid_argument).

/// P_m^(k)(t) by the recurrence P_{m+1}^(k) = (t+m) P_m^(k) + P_m^(k-1).
[[nodiscard]] double poch_deriv(int m, int k, double t);

/// P_m^(k)(t) by the Stirling-number sum
///   (-1)^(m-k) sum_{l=0}^{m-k} (-1)^l C(m,l) s(m-l,k) (t)_l.
/// Limited to m <= 64 by the Stirling table.
[[nodiscard]] double poch_deriv_explicit(int m, int k, double t);

/// P_m^(k)(1) = (-1)^(m-k) s(m+1, k+1).
[[nodiscard]] double poch_deriv_at_one(int m, int k);

/// Q_m^(k)(t) by the recurrence Q_{m+1}^(k) = (Q_m^(k) - Q_{m+1}^(k-1)) / (t+m).
/// Throws PoleError when t is one of 0, -1, ..., -(m-1).
[[nodiscard]] double recip_poch_deriv(int m, int k, double t);

/// Q_m^(k)(t) by partial fractions,
///   (-1)^k sum_{l=0}^{m-1} (-1)^l / (l! (m-1-l)!) / (t+l)^(k+1).
/// Loses roughly m bits to cancellation; kept as an independent route.
[[nodiscard]] double recip_poch_deriv_explicit(int m, int k, double t);

/// Streaming Q_m^(j)(t), j = 0..k_max, starting at m = 0 and advanced one m
/// at a time. Used by series whose length is not known in advance.
template <typename Real>
class BasicRecipPochColumn {
 public:
  BasicRecipPochColumn(int k_max, Real t) : t_{t} {
    if (k_max < 0) throw std::invalid_argument("RecipPochColumn: k_max must be >= 0");
    values_.assign(static_cast<std::size_t>(k_max) + 1, Real(0));
    values_[0] = Real(1);
  }

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] Real operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }

  /// m -> m + 1. Throws PoleError if t + m == 0.
  void advance() {
    const Real shift = t_ + static_cast<Real>(m_);
    if (shift == Real(0)) {
      throw PoleError("RecipPochColumn: t + m = 0 at m = " + std::to_string(m_));
    }
    values_[0] /= shift;
    for (std::size_t j = 1; j < values_.size(); ++j) {
      values_[j] = (values_[j] - values_[j - 1]) / shift;
    }
    ++m_;
  }

 private:
  Real t_;
  int m_ = 0;
  std::vector<Real> values_;
};

using RecipPochColumn = BasicRecipPochColumn<double>;

/// P_m^(j)(t) for 0 <= m <= m_max, 0 <= j <= k_max.
template <typename Real = double>
[[nodiscard]] Table2D<Real> poch_deriv_table(int m_max, int k_max, Real t) {
  if (m_max < 0 || k_max < 0) throw std::invalid_argument("poch_deriv_table: negative size");
  Table2D<Real> table{m_max + 1, k_max + 1, Real(0)};
  table(0, 0) = Real(1);
  for (int m = 0; m < m_max; ++m) {
    const Real shift = t + static_cast<Real>(m);
    table(m + 1, 0) = shift * table(m, 0);
    for (int j = 1; j <= k_max; ++j) table(m + 1, j) = shift * table(m, j) + table(m, j - 1);
  }
  return table;
}

/// Q_m^(j)(t) for 0 <= m <= m_max, 0 <= j <= k_max.
[[nodiscard]] Table2D<double> recip_poch_deriv_table(int m_max, int k_max, double t);

}  // namespace nuderiv
