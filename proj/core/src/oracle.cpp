#include "nuderiv/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "nuderiv/compensated_sum.hpp"
#include "nuderiv/errors.hpp"
#include "nuderiv/gamma_recip.hpp"
#include "nuderiv/pochhammer.hpp"

namespace nuderiv {
namespace {

double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

long double recip_gamma_ld(long double t) {
  if (t <= 0.0L && std::floor(t) == t) return 0.0L;
  return 1.0L / std::tgamma(t);
}

}  // namespace

void FdConfig::validate() const {
  if (!(base_step > 0.0)) throw std::invalid_argument("FdConfig: base_step must be > 0");
  if (levels < 1) throw std::invalid_argument("FdConfig: levels must be >= 1");
}

long double bessel_j_direct(long double nu, long double z, const SeriesConfig& cfg) {
  if (!(z > 0.0L)) throw std::invalid_argument("bessel_j_direct: z must be > 0");
  cfg.validate();
  const long double x = -z * z / 4.0L;
  // Terms with nu+1+m a nonpositive integer vanish; the stopping rule only
  // starts once the gamma argument is positive.
  const long double first_live = std::max(0.0L, std::ceil(-nu - 1.0L));
  CompensatedSum<long double> sum;
  long double weight = 1.0L;
  int small_run = 0;
  const int limit = static_cast<int>(first_live) + cfg.max_terms;
  for (int m = 0; m < limit; ++m) {
    const long double term = weight * recip_gamma_ld(nu + 1.0L + m);
    sum += term;
    if (m >= first_live) {
      const long double scale = std::max(std::abs(sum.value()), 1e-300L);
      if (std::abs(term) < static_cast<long double>(cfg.tol) * 1e-3L * scale) {
        if (++small_run == 2) return std::pow(z / 2.0L, nu) * sum.value();
      } else {
        small_run = 0;
      }
    }
    weight *= x / static_cast<long double>(m + 1);
  }
  throw NonConvergence("bessel_j_direct: no convergence within " + std::to_string(cfg.max_terms) +
                       " terms");
}

FdEstimate oracle_finite_difference(double nu, double z, int k, const FdConfig& fd,
                                    const SeriesConfig& cfg) {
  fd.validate();
  cfg.validate();
  if (k < 1 || k > kMaxFdOrder) {
    throw std::invalid_argument("oracle_finite_difference: k must be in [1, 4] (got " +
                                std::to_string(k) + ")");
  }
  if (!(z > 0.0)) throw std::invalid_argument("oracle_finite_difference: z must be > 0");
  const long double h0 = static_cast<long double>(fd.base_step) * std::ldexp(1.0L, k - 1);
  const long double finest = std::ldexp(h0, -(fd.levels - 1));
  if (!(finest > 1e-12L * std::max(1.0L, std::abs(static_cast<long double>(nu))))) {
    throw std::underflow_error("oracle_finite_difference: finest step " +
                               std::to_string(static_cast<double>(finest)) + " too small for nu");
  }
  const long double zl = z;
  auto f = [&](long double n) { return bessel_j_direct(n, zl, cfg); };
  const auto [value, err] =
      richardson_central<long double>(f, static_cast<long double>(nu), k, h0, fd.levels);
  return {static_cast<double>(value), static_cast<double>(err)};
}

double oracle_recurrence(double nu, double z, int k, const SeriesConfig& cfg) {
  if (!(z > 0.0)) throw std::invalid_argument("oracle_recurrence: z must be > 0");
  if (k < 0) throw std::invalid_argument("oracle_recurrence: k must be >= 0");
  cfg.validate();
  const OrderSplit split = split_order(nu);
  const int N = split.N;
  const double eps = split.eps;
  const double x = -z * z / 4.0;
  const double log_half_z = std::log(z / 2.0);

  std::vector<double> g(static_cast<std::size_t>(k) + 1);
  double fact = 1.0;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) fact *= j;
    g[static_cast<std::size_t>(j)] = recip_gamma_deriv(j, eps) / fact;
  }

  const int head_count = N < 0 ? -N : 0;
  Table2D<double> poch;
  if (head_count > 0) poch = poch_deriv_table(head_count, k, -eps);
  RecipPochColumn recip{k, 1.0 + eps};
  for (int s = 0; s < N; ++s) recip.advance();

  // T_l = sum_m x^m/m! G^(l)(nu+1+m) / l!, with the Leibniz rule
  //   G^(l)(1+eps+s)/l! = sum_j G^(j)(1+eps)/j! * [shift factor]^(l-j)/(l-j)!
  std::vector<CompensatedSum<double>> t(static_cast<std::size_t>(k) + 1);
  std::vector<double> shifted(static_cast<std::size_t>(k) + 1);
  double weight = 1.0;
  int small_run = 0;
  bool converged = false;
  for (int m = 0; m < head_count + cfg.max_terms; ++m) {
    const int s = N + m;
    for (int l = 0; l <= k; ++l) {
      double acc = 0.0;
      for (int j = 0; j <= l; ++j) {
        const int i = l - j;
        const double factor = s >= 0 ? recip[i] : parity(-s + i) * poch(-s, i);
        acc += g[static_cast<std::size_t>(j)] * factor;
      }
      shifted[static_cast<std::size_t>(l)] = acc;
    }
    bool all_small = true;
    for (int l = 0; l <= k; ++l) {
      const double term = weight * shifted[static_cast<std::size_t>(l)];
      auto& acc = t[static_cast<std::size_t>(l)];
      acc += term;
      if (!(std::abs(term) < cfg.tol * std::max(std::abs(acc.value()), 1e-300))) all_small = false;
    }
    if (s >= 0) recip.advance();
    weight *= x / static_cast<double>(m + 1);
    if (m >= head_count) {
      small_run = all_small ? small_run + 1 : 0;
      if (small_run == 2) {
        converged = true;
        break;
      }
    }
  }
  if (!converged) {
    throw NonConvergence("oracle_recurrence: no convergence within " +
                         std::to_string(cfg.max_terms) + " terms");
  }

  // Undo the 1/l! scaling: T_l -> sum_m x^m/m! G^(l)(nu+1+m).
  std::vector<double> series(static_cast<std::size_t>(k) + 1);
  fact = 1.0;
  for (int l = 0; l <= k; ++l) {
    if (l > 0) fact *= l;
    series[static_cast<std::size_t>(l)] = fact * t[static_cast<std::size_t>(l)].value();
  }

  const double power = std::pow(z / 2.0, nu);
  double derivative = power * series[0];
  for (int order = 1; order <= k; ++order) {
    double inner = 0.0;
    double binom = 1.0;  // C(order-1, l-1)
    for (int l = 1; l <= order; ++l) {
      inner += binom * series[static_cast<std::size_t>(l)] * std::pow(log_half_z, order - l);
      binom = binom * static_cast<double>(order - l) / static_cast<double>(l);
    }
    derivative = log_half_z * derivative + power * inner;
  }
  return derivative;
}

}  // namespace nuderiv
