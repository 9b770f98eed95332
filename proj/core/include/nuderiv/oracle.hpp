#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nuderiv/order_derivative.hpp"

namespace nuderiv {

struct FdConfig {
  double base_step = 1e-2;
  int levels = 4;

  void validate() const;
};

struct FdEstimate {
  double value = 0.0;
  /// |difference between the last two diagonal extrapolants|.
  double error_estimate = 0.0;

  static constexpr double kUsableLimit = 1e-4;
  [[nodiscard]] bool usable() const { return error_estimate <= kUsableLimit; }
};

/// Highest order oracle_finite_difference accepts for J_nu.
inline constexpr int kMaxFdOrder = 4;
/// Highest order richardson_central accepts.
inline constexpr int kMaxStencilOrder = 6;

namespace detail {

// Central stencils for derivative orders 1..6 at offsets -3..3, all O(h^2)
// with an error expansion in even powers of h.
inline constexpr std::array<std::array<double, 7>, 6> kCentralStencils{{
    {0.0, 0.0, -0.5, 0.0, 0.5, 0.0, 0.0},
    {0.0, 0.0, 1.0, -2.0, 1.0, 0.0, 0.0},
    {0.0, -0.5, 1.0, 0.0, -1.0, 0.5, 0.0},
    {0.0, 1.0, -4.0, 6.0, -4.0, 1.0, 0.0},
    {-0.5, 2.0, -2.5, 0.0, 2.5, -2.0, 0.5},
    {1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0},
}};

}  // namespace detail

/// Richardson-extrapolated central difference of order k (1 <= k <= 6) with
/// steps h, h/2, h/4, ... and polynomial extrapolation in h^2. Returns the
/// estimate and the gap between the last two diagonal entries.
///
/// Real can be any floating type with std-style arithmetic, including
/// multiprecision types.
template <typename Real, typename Fn>
std::pair<Real, Real> richardson_central(Fn&& f, Real x, int k, Real h0, int levels) {
  using std::abs;
  if (k < 1 || k > kMaxStencilOrder) {
    throw std::invalid_argument("richardson_central: derivative order must be in [1, 6]");
  }
  if (levels < 1) throw std::invalid_argument("richardson_central: levels must be >= 1");
  const auto& stencil = detail::kCentralStencils[static_cast<std::size_t>(k - 1)];

  std::vector<std::vector<Real>> rows;
  rows.reserve(static_cast<std::size_t>(levels));
  Real h = h0;
  for (int i = 0; i < levels; ++i) {
    Real acc = Real(0);
    for (int offset = -3; offset <= 3; ++offset) {
      const double w = stencil[static_cast<std::size_t>(offset + 3)];
      if (w != 0.0) acc += Real(w) * f(Real(x + Real(offset) * h));
    }
    Real hk = Real(1);
    for (int p = 0; p < k; ++p) hk *= h;
    std::vector<Real> row{Real(acc / hk)};
    Real factor = Real(1);
    for (int j = 1; j <= i; ++j) {
      factor *= Real(4);
      const Real prev = row.back();
      row.push_back(Real(prev + (prev - rows.back()[static_cast<std::size_t>(j - 1)]) /
                                    (factor - Real(1))));
    }
    rows.push_back(std::move(row));
    h /= Real(2);
  }
  const Real best = rows.back().back();
  Real err = Real(0);
  if (levels > 1) err = Real(abs(best - rows[rows.size() - 2].back()));
  return {best, err};
}

/// J_nu(z) summed directly from (z/2)^nu sum_m (-z^2/4)^m / (m! Gamma(nu+1+m))
/// in long double with the platform gamma function. Shares no code with
/// bessel_j.
[[nodiscard]] long double bessel_j_direct(long double nu, long double z,
                                          const SeriesConfig& cfg = {});

/// Finite-difference estimate of d^k/dnu^k J_nu(z), 1 <= k <= 4, applied to
/// bessel_j_direct. The starting step for order k is base_step * 2^(k-1):
/// higher stencils divide by h^k, and the wider step keeps their roundoff
/// below 1e-8 relative. Throws std::underflow_error when the finest step is
/// lost against nu.
[[nodiscard]] FdEstimate oracle_finite_difference(double nu, double z, int k,
                                                  const FdConfig& fd = {},
                                                  const SeriesConfig& cfg = {});

/// d^k/dnu^k J_nu(z) built up one order at a time from
///   D_k = ln(z/2) D_{k-1}
///       + (z/2)^nu sum_m (-z^2/4)^m/m! sum_{l=1}^k C(k-1,l-1) G^(l)(nu+1+m) ln(z/2)^(k-l)
/// starting from D_0 = J_nu(z). G^(l) at the shifted argument nu+1+m comes from
/// the Leibniz rule on 1/Gamma(1+eps) times the Pochhammer factor, so the
/// reciprocal-gamma Taylor series is only ever evaluated at 1+eps.
[[nodiscard]] double oracle_recurrence(double nu, double z, int k,
                                       const SeriesConfig& cfg = {});

}  // namespace nuderiv
