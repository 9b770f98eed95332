#pragma once

#include <span>
#include <vector>

namespace nuderiv {

/// Taylor coefficients c_1..c_J of the reciprocal gamma function,
/// 1/Gamma(t) = sum_{j>=1} c_j t^j.
///
/// The coefficients are generated from the zeta-value recurrence
///   (j-1) c_j = gamma c_{j-1} - zeta(2) c_{j-2} + ... + (-1)^j zeta(j-1) c_1
/// in 100-digit arithmetic and rounded to double once. The recurrence cancels
/// heavily (c_60 is about 1e-54 while its summands are O(1)), so double
/// precision generation would be useless beyond j ~ 15.
class GammaCoeffs {
 public:
  static constexpr int kDefaultCount = 60;

  explicit GammaCoeffs(int j_max = kDefaultCount);

  /// c_j with 1-based indexing, 1 <= j <= count().
  [[nodiscard]] double operator[](int j) const;
  [[nodiscard]] int count() const { return static_cast<int>(coeffs_.size()); }
  /// c_j rounded to long double instead of double.
  [[nodiscard]] long double extended(int j) const;
  /// c_1..c_J; element 0 holds c_1.
  [[nodiscard]] std::span<const double> coefficients() const { return coeffs_; }

 private:
  std::vector<double> coeffs_;
  std::vector<long double> extended_;
};

[[nodiscard]] GammaCoeffs gamma_coeffs(int j_max);

/// Shared 60-coefficient table, built on first use.
[[nodiscard]] const GammaCoeffs& default_gamma_coeffs();

struct RecipGammaValue {
  double value = 0.0;
  int terms = 0;
};

inline constexpr double kRecipGammaTol = 1e-15;

/// G^(k)(1+eps) = d^k/dt^k 1/Gamma(t) at t = 1+eps, |eps| <= 1/2, summed as
///   sum_{j>=0} c_{j+k+1} (j+1)_k eps^j
/// until two consecutive terms fall below tol * max(|partial|, 1e-300).
/// Throws NonConvergence if the coefficient table runs out first.
[[nodiscard]] RecipGammaValue recip_gamma_deriv_eval(
    int k, double eps, const GammaCoeffs& table = default_gamma_coeffs(),
    double tol = kRecipGammaTol);

[[nodiscard]] double recip_gamma_deriv(int k, double eps,
                                       const GammaCoeffs& table = default_gamma_coeffs(),
                                       double tol = kRecipGammaTol);

/// Long double twin of recip_gamma_deriv, summed from the extended
/// coefficients. Used inside the Bessel engines.
[[nodiscard]] long double recip_gamma_deriv_extended(
    int k, long double eps, const GammaCoeffs& table = default_gamma_coeffs(),
    long double tol = 1e-19L);

/// psi(1+eps) = -G^(1)(1+eps) / G^(0)(1+eps).
[[nodiscard]] double digamma_one_plus(double eps,
                                      const GammaCoeffs& table = default_gamma_coeffs());

}  // namespace nuderiv
