#include "nuderiv/pochhammer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nuderiv/combinatorics.hpp"
#include "nuderiv/errors.hpp"

namespace nuderiv {
namespace {

void check_indices(int m, int k, const char* what) {
  if (m < 0 || k < 0) {
    throw std::invalid_argument(std::string{what} + ": m and k must be >= 0 (got m=" +
                                std::to_string(m) + ", k=" + std::to_string(k) + ")");
  }
}

// 1/(t)_m has poles at t = 0, -1, ..., -(m-1).
void check_pole(int m, double t, const char* what) {
  if (t <= 0.0 && std::floor(t) == t && -t < static_cast<double>(m)) {
    throw PoleError(std::string{what} + ": t = " + std::to_string(t) +
                    " is a pole of 1/(t)_" + std::to_string(m));
  }
}

double sign_of_parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double pochhammer(double t, int m) {
  if (m < 0) throw std::invalid_argument("pochhammer: m must be >= 0");
  double p = 1.0;
  for (int i = 0; i < m; ++i) p *= t + static_cast<double>(i);
  return p;
}

double poch_deriv(int m, int k, double t) {
  check_indices(m, k, "poch_deriv");
  if (k > m) return 0.0;
  std::vector<double> column(static_cast<std::size_t>(k) + 1, 0.0);
  column[0] = 1.0;
  for (int n = 0; n < m; ++n) {
    const double shift = t + static_cast<double>(n);
    for (std::size_t j = column.size() - 1; j > 0; --j) {
      column[j] = shift * column[j] + column[j - 1];
    }
    column[0] *= shift;
  }
  return column.back();
}

double poch_deriv_explicit(int m, int k, double t) {
  check_indices(m, k, "poch_deriv_explicit");
  if (k > m) return 0.0;
  const StirlingTable& s = default_stirling_table();
  double sum = 0.0;
  double binom = 1.0;  // C(m, l)
  double rising = 1.0; // (t)_l
  for (int l = 0; l <= m - k; ++l) {
    sum += sign_of_parity(l) * binom * s.as_double(m - l, k) * rising;
    binom = binom * static_cast<double>(m - l) / static_cast<double>(l + 1);
    rising *= t + static_cast<double>(l);
  }
  return sign_of_parity(m - k) * sum;
}

double poch_deriv_at_one(int m, int k) {
  check_indices(m, k, "poch_deriv_at_one");
  return sign_of_parity(m - k) * default_stirling_table().as_double(m + 1, k + 1);
}

double recip_poch_deriv(int m, int k, double t) {
  check_indices(m, k, "recip_poch_deriv");
  check_pole(m, t, "recip_poch_deriv");
  RecipPochColumn column{k, t};
  for (int n = 0; n < m; ++n) column.advance();
  return column[k];
}

double recip_poch_deriv_explicit(int m, int k, double t) {
  check_indices(m, k, "recip_poch_deriv_explicit");
  if (m == 0) return k == 0 ? 1.0 : 0.0;
  check_pole(m, t, "recip_poch_deriv_explicit");
  // 1/(l! (m-1-l)!) = C(m-1, l) / (m-1)!
  const double inv_factorial = 1.0 / std::tgamma(static_cast<double>(m));
  double binom = 1.0;
  double sum = 0.0;
  for (int l = 0; l < m; ++l) {
    sum += sign_of_parity(l) * binom / std::pow(t + static_cast<double>(l), k + 1);
    binom = binom * static_cast<double>(m - 1 - l) / static_cast<double>(l + 1);
  }
  return sign_of_parity(k) * sum * inv_factorial;
}

Table2D<double> recip_poch_deriv_table(int m_max, int k_max, double t) {
  check_indices(m_max, k_max, "recip_poch_deriv_table");
  check_pole(m_max, t, "recip_poch_deriv_table");
  Table2D<double> table{m_max + 1, k_max + 1, 0.0};
  RecipPochColumn column{k_max, t};
  for (int m = 0;; ++m) {
    for (int j = 0; j <= k_max; ++j) table(m, j) = column[j];
    if (m == m_max) break;
    column.advance();
  }
  return table;
}

}  // namespace nuderiv
