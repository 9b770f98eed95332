#pragma once

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nuderiv/table.hpp"

namespace nuderiv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Signed Stirling numbers of the first kind s(n,k), 0 <= k <= n <= n_max,
/// in arbitrary-size integers. Generated by s(n+1,k) = s(n,k-1) - n s(n,k).
class StirlingTable {
 public:
  static constexpr int kMaxOrder = 64;

  explicit StirlingTable(int n_max = kMaxOrder);

  /// s(n,k); zero for k > n. Throws std::out_of_range for n > max_order().
  [[nodiscard]] const BigInt& operator()(int n, int k) const;
  [[nodiscard]] double as_double(int n, int k) const;
  [[nodiscard]] long double as_long_double(int n, int k) const;
  [[nodiscard]] int max_order() const { return n_max_; }

 private:
  int n_max_;
  Table2D<BigInt> entries_;
  Table2D<double> rounded_;
  Table2D<long double> rounded_extended_;
};

[[nodiscard]] const StirlingTable& default_stirling_table();

/// s(n,k) from the shared table (n <= 64).
[[nodiscard]] BigInt stirling_first(int n, int k);

/// Modified generalized harmonic numbers
///   H^_m^(k) = sum_{j=1}^m (-1)^(j-1) C(m,j) / j^k,  H^_0^(k) = delta_{k,0},
/// held as exact rationals. Filled with the cancellation-free recurrence
///   H^_{m+1}^(k) = H^_m^(k) + H^_m^(k-1) / (m+1).
class HarmonicTable {
 public:
  static constexpr int kDefaultMaxM = 64;
  static constexpr int kDefaultMaxK = 8;

  HarmonicTable(int m_max = kDefaultMaxM, int k_max = kDefaultMaxK);

  /// Throws std::out_of_range outside the stored indices.
  [[nodiscard]] const Rational& operator()(int m, int k) const;
  [[nodiscard]] double as_double(int m, int k) const;
  [[nodiscard]] int max_m() const { return m_max_; }
  [[nodiscard]] int max_k() const { return k_max_; }

 private:
  int m_max_;
  int k_max_;
  Table2D<Rational> entries_;
};

[[nodiscard]] const HarmonicTable& default_harmonic_table();

/// H^_m^(k) from the shared table (m <= 64, k <= 8).
[[nodiscard]] Rational mod_harmonic(int m, int k);

/// Streaming H^_m^(j), j = 0..k_max, advanced one m at a time by the same
/// recurrence. Every entry is a sum of positive terms, so the recurrence
/// stays accurate for any m in floating point.
template <typename Real>
class BasicHarmonicColumn {
 public:
  explicit BasicHarmonicColumn(int k_max) {
    if (k_max < 0) throw std::invalid_argument("HarmonicColumn: k_max must be >= 0");
    values_.assign(static_cast<std::size_t>(k_max) + 1, Real(0));
    values_[0] = Real(1);
  }

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] Real operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }

  /// m -> m + 1.
  void advance() {
    const Real inv = Real(1) / static_cast<Real>(m_ + 1);
    for (std::size_t k = 1; k < values_.size(); ++k) values_[k] += values_[k - 1] * inv;
    ++m_;
  }

 private:
  int m_ = 0;
  std::vector<Real> values_;
};

using HarmonicColumn = BasicHarmonicColumn<double>;

}  // namespace nuderiv
