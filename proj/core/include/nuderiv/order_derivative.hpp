#pragma once

#include <string_view>

namespace nuderiv {

/// nu = N + eps with N the nearest integer and eps in [-1/2, 1/2).
struct OrderSplit {
  double nu = 0.0;
  int N = 0;
  double eps = 0.0;
};

/// Half-integers split with eps = -1/2, i.e. N = floor(nu + 1/2).
/// Throws std::invalid_argument for non-finite nu or |nu| beyond int range.
[[nodiscard]] OrderSplit split_order(double nu);

/// Builds an explicit split. Either neighbour of a half-integer is admissible;
/// requires |eps| <= 1/2.
[[nodiscard]] OrderSplit make_split(int N, double eps);

struct SeriesConfig {
  double tol = 1e-13;
  int max_terms = 300;

  /// Throws std::invalid_argument unless tol > 0 and max_terms >= 10.
  void validate() const;
};

enum class Branch { NonNegN, NegN, IntegerNonNeg, IntegerNeg };

[[nodiscard]] std::string_view to_string(Branch branch);

struct DerivativeResult {
  double value = 0.0;
  int terms_used = 0;
  Branch branch = Branch::NonNegN;
  /// |last m-series term| / |partial sum| at the point the series stopped.
  double tail_estimate = 0.0;
};

/// Results outside this envelope are computed but carry no accuracy
/// guarantee: alternating-series cancellation grows with z, and the
/// coefficient tables are sized for moderate k.
inline constexpr double kSupportedMaxZ = 10.0;
inline constexpr double kSupportedMaxAbsNu = 10.0;
inline constexpr int kSupportedMaxK = 6;

[[nodiscard]] bool within_supported_envelope(double nu, double z, int k);

/// J_nu(z) for real nu and z > 0 from the ascending series, written as
///   (z/2)^nu / Gamma(1+eps) * sum_m (-z^2/4)^m / (m! (1+eps)_{m+N})
/// with the negative-N terms carried by (-eps)_{-N-m}.
[[nodiscard]] double bessel_j(double nu, double z, const SeriesConfig& cfg = {});

/// d^k/dnu^k J_nu(z). An exactly integral nu dispatches to the
/// harmonic-number specialisation; everything else goes through the general
/// series. k = 0 returns J_nu(z).
[[nodiscard]] DerivativeResult dnu_bessel_j(double nu, double z, int k,
                                            const SeriesConfig& cfg = {});

/// The general series for an explicit split, without integer dispatch:
///   k! (z/2)^nu sum_m (-z^2/4)^m/m! sum_{k1,k2} ln(z/2)^k1/k1! G^(k2)(1+eps)/k2!
///     * W_m^(k-k1-k2)
/// where W is Q_{m+N}(1+eps) when m+N >= 0 and (-1)^(-N-m+k') P_{-N-m}(-eps)
/// otherwise.
[[nodiscard]] DerivativeResult dnu_bessel_j_split(const OrderSplit& split, double z, int k,
                                                  const SeriesConfig& cfg = {});

/// Integer-order specialisation: harmonic numbers for n >= 0, and for n < 0
/// Stirling numbers on the first |n| terms followed by H^_{m-|n|}.
[[nodiscard]] DerivativeResult dnu_bessel_j_integer(int n, double z, int k,
                                                    const SeriesConfig& cfg = {});

/// Closed-form first derivative:
///   (ln(z/2) - psi(1+eps)) J_nu(z) + (z/2)^nu / Gamma(1+eps) * remainder,
/// with the gamma-constant forms at integer nu.
[[nodiscard]] double dnu_bessel_j_first(double nu, double z, const SeriesConfig& cfg = {});

}  // namespace nuderiv
