#include "nuderiv/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace nuderiv {
namespace {

void check_nonnegative(int a, int b, const char* what) {
  if (a < 0 || b < 0) throw std::invalid_argument(std::string{what} + ": negative index");
}

}  // namespace

StirlingTable::StirlingTable(int n_max)
    : n_max_{n_max},
      entries_{n_max + 1, n_max + 1},
      rounded_{n_max + 1, n_max + 1},
      rounded_extended_{n_max + 1, n_max + 1} {
  if (n_max < 0) throw std::invalid_argument("StirlingTable: n_max must be >= 0");
  entries_(0, 0) = 1;
  for (int n = 0; n < n_max; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      BigInt next = entries_(n, k - 1);
      if (k <= n) next -= BigInt{n} * entries_(n, k);
      entries_(n + 1, k) = std::move(next);
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      rounded_(n, k) = entries_(n, k).convert_to<double>();
      rounded_extended_(n, k) = entries_(n, k).convert_to<long double>();
    }
  }
}

const BigInt& StirlingTable::operator()(int n, int k) const {
  static const BigInt zero{0};
  check_nonnegative(n, k, "stirling_first");
  if (n > n_max_) {
    throw std::out_of_range("stirling_first: n = " + std::to_string(n) + " exceeds table cap " +
                            std::to_string(n_max_));
  }
  if (k > n) return zero;
  return entries_(n, k);
}

double StirlingTable::as_double(int n, int k) const {
  (void)(*this)(n, k);
  if (k > n) return 0.0;
  return rounded_(n, k);
}

long double StirlingTable::as_long_double(int n, int k) const {
  (void)(*this)(n, k);
  if (k > n) return 0.0L;
  return rounded_extended_(n, k);
}

const StirlingTable& default_stirling_table() {
  static const StirlingTable table{StirlingTable::kMaxOrder};
  return table;
}

BigInt stirling_first(int n, int k) { return default_stirling_table()(n, k); }

HarmonicTable::HarmonicTable(int m_max, int k_max)
    : m_max_{m_max}, k_max_{k_max}, entries_{m_max + 1, k_max + 1} {
  if (m_max < 0 || k_max < 0) throw std::invalid_argument("HarmonicTable: negative size");
  entries_(0, 0) = 1;
  for (int m = 0; m < m_max; ++m) {
    entries_(m + 1, 0) = 1;
    for (int k = 1; k <= k_max; ++k) {
      entries_(m + 1, k) = entries_(m, k) + entries_(m + 1, k - 1) / Rational{m + 1};
    }
  }
}

const Rational& HarmonicTable::operator()(int m, int k) const {
  check_nonnegative(m, k, "mod_harmonic");
  if (m > m_max_ || k > k_max_) {
    throw std::out_of_range("mod_harmonic: (m=" + std::to_string(m) + ", k=" + std::to_string(k) +
                            ") outside table");
  }
  return entries_(m, k);
}

double HarmonicTable::as_double(int m, int k) const { return (*this)(m, k).convert_to<double>(); }

const HarmonicTable& default_harmonic_table() {
  static const HarmonicTable table{};
  return table;
}

Rational mod_harmonic(int m, int k) { return default_harmonic_table()(m, k); }

}  // namespace nuderiv
