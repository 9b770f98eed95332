#include "nuderiv/gamma_recip.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "nuderiv/errors.hpp"

namespace nuderiv {
namespace {

using Wide = boost::multiprecision::cpp_bin_float_100;

// zeta(s), s >= 2, by Euler-Maclaurin with the first kHeadTerms terms summed
// explicitly. The remainder after kCorrections Bernoulli corrections is below
// 1e-88 for every s >= 2.
Wide zeta_euler_maclaurin(int s) {
  constexpr int kHeadTerms = 60;
  constexpr int kCorrections = 40;
  const Wide n_cut{kHeadTerms};

  Wide sum = 0;
  for (int n = 1; n < kHeadTerms; ++n) sum += pow(Wide{n}, -s);
  sum += pow(n_cut, 1 - s) / (s - 1);
  sum += pow(n_cut, -s) / 2;

  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
  Wide rising = s;                 // (s)_{2j-1} for j = 1
  Wide factorial = 2;              // (2j)!
  Wide power = pow(n_cut, -s - 1); // N^{-s-2j+1}
  const Wide inv_n2 = 1 / (n_cut * n_cut);
  for (int j = 1; j <= kCorrections; ++j) {
    sum += boost::math::bernoulli_b2n<Wide>(j) / factorial * rising * power;
    rising *= Wide{s + 2 * j - 1} * Wide{s + 2 * j};
    factorial *= Wide{2 * j + 1} * Wide{2 * j + 2};
    power *= inv_n2;
  }
  return sum;
}

}  // namespace

GammaCoeffs::GammaCoeffs(int j_max) {
  if (j_max < 2) throw std::invalid_argument("gamma_coeffs: j_max must be >= 2");

  std::vector<Wide> zeta(static_cast<std::size_t>(j_max));
  for (int s = 2; s < j_max; ++s) zeta[static_cast<std::size_t>(s)] = zeta_euler_maclaurin(s);

  const Wide euler = boost::math::constants::euler<Wide>();
  std::vector<Wide> c(static_cast<std::size_t>(j_max) + 1);
  c[1] = 1;
  for (int k = 2; k <= j_max; ++k) {
    Wide acc = euler * c[static_cast<std::size_t>(k - 1)];
    for (int i = 2; i <= k - 1; ++i) {
      const Wide term = zeta[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
      if (i % 2 == 0) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    c[static_cast<std::size_t>(k)] = acc / (k - 1);
  }

  coeffs_.reserve(static_cast<std::size_t>(j_max));
  extended_.reserve(static_cast<std::size_t>(j_max));
  for (int j = 1; j <= j_max; ++j) {
    coeffs_.push_back(static_cast<double>(c[static_cast<std::size_t>(j)]));
    extended_.push_back(static_cast<long double>(c[static_cast<std::size_t>(j)]));
  }
}

double GammaCoeffs::operator[](int j) const {
  if (j < 1 || j > count()) {
    throw std::out_of_range("GammaCoeffs: index " + std::to_string(j) + " outside [1, " +
                            std::to_string(count()) + "]");
  }
  return coeffs_[static_cast<std::size_t>(j - 1)];
}

long double GammaCoeffs::extended(int j) const {
  (void)(*this)[j];
  return extended_[static_cast<std::size_t>(j - 1)];
}

GammaCoeffs gamma_coeffs(int j_max) { return GammaCoeffs{j_max}; }

const GammaCoeffs& default_gamma_coeffs() {
  static const GammaCoeffs table{GammaCoeffs::kDefaultCount};
  return table;
}

namespace {

template <typename Real, typename Coeff>
std::pair<Real, int> sum_recip_gamma_series(int k, Real eps, int count, Coeff&& coeff, Real tol) {
  if (k < 0) throw std::invalid_argument("recip_gamma_deriv: k must be >= 0");
  if (!(std::abs(eps) <= Real(0.5))) {
    throw std::invalid_argument("recip_gamma_deriv: |eps| must be <= 1/2");
  }
  if (!(tol > Real(0))) throw std::invalid_argument("recip_gamma_deriv: tol must be > 0");

  Real sum = 0;
  Real eps_power = 1;
  int small_run = 0;
  for (int j = 0; j + k + 1 <= count; ++j) {
    Real rising = 1;  // (j+1)_k
    for (int i = 1; i <= k; ++i) rising *= static_cast<Real>(j + i);
    const Real term = coeff(j + k + 1) * rising * eps_power;
    sum += term;
    if (std::abs(term) < tol * std::max(std::abs(sum), Real(1e-300))) {
      if (++small_run == 2) return {sum, j + 1};
    } else {
      small_run = 0;
    }
    eps_power *= eps;
  }
  throw NonConvergence("recip_gamma_deriv: coefficient table exhausted at k=" + std::to_string(k) +
                       ", eps=" + std::to_string(static_cast<double>(eps)));
}

}  // namespace

RecipGammaValue recip_gamma_deriv_eval(int k, double eps, const GammaCoeffs& table, double tol) {
  const auto [value, terms] = sum_recip_gamma_series<double>(
      k, eps, table.count(), [&](int j) { return table[j]; }, tol);
  return {value, terms};
}

long double recip_gamma_deriv_extended(int k, long double eps, const GammaCoeffs& table,
                                       long double tol) {
  return sum_recip_gamma_series<long double>(
             k, eps, table.count(), [&](int j) { return table.extended(j); }, tol)
      .first;
}

double recip_gamma_deriv(int k, double eps, const GammaCoeffs& table, double tol) {
  return recip_gamma_deriv_eval(k, eps, table, tol).value;
}

double digamma_one_plus(double eps, const GammaCoeffs& table) {
  return -recip_gamma_deriv(1, eps, table) / recip_gamma_deriv(0, eps, table);
}

}  // namespace nuderiv
