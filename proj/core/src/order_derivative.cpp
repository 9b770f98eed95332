#include "nuderiv/order_derivative.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nuderiv/combinatorics.hpp"
#include "nuderiv/compensated_sum.hpp"
#include "nuderiv/errors.hpp"
#include "nuderiv/gamma_recip.hpp"
#include "nuderiv/pochhammer.hpp"

namespace nuderiv {
namespace {

// Working precision of the series.
using Ext = long double;

struct SeriesOutcome {
  Ext sum = 0;
  int terms = 0;
  double tail = 0.0;
};

// Adds head(m) for m < head_count unconditionally, then tail(m) for
// m = head_count, head_count+1, ... until two consecutive tail terms fall
// below tol * max(|partial|, 1e-300). Both callables are invoked in
// increasing m, so they may carry running state.
template <typename Head, typename Tail>
SeriesOutcome sum_series(int head_count, Head&& head, Tail&& tail, const SeriesConfig& cfg,
                         const char* what) {
  CompensatedSum<Ext> sum;
  int m = 0;
  for (; m < head_count; ++m) sum += head(m);
  int small_run = 0;
  const Ext tol = cfg.tol;
  for (; m < head_count + cfg.max_terms; ++m) {
    const Ext term = tail(m);
    sum += term;
    const Ext scale = std::max(std::abs(sum.value()), Ext(1e-300));
    if (std::abs(term) < tol * scale) {
      if (++small_run == 2) {
        return {sum.value(), m + 1, static_cast<double>(std::abs(term) / scale)};
      }
    } else {
      small_run = 0;
    }
  }
  throw NonConvergence(std::string{what} + ": no convergence within " +
                       std::to_string(cfg.max_terms) + " terms");
}

void check_argument(double z, int k) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw std::invalid_argument("z must be finite and > 0 (got " + std::to_string(z) + ")");
  }
  if (k < 0) throw std::invalid_argument("derivative order k must be >= 0");
}

Ext parity(int n) { return (n % 2 == 0) ? Ext(1) : Ext(-1); }

Ext factorial(int n) {
  Ext f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<Ext>(i);
  return f;
}

// L^j / j! for j = 0..k.
std::vector<Ext> scaled_log_powers(Ext log_half_z, int k) {
  std::vector<Ext> out(static_cast<std::size_t>(k) + 1);
  out[0] = 1;
  for (int j = 1; j <= k; ++j) {
    out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j - 1)] * log_half_z / j;
  }
  return out;
}

// coeff[j] = sum_{k1 + k2 = k - j} log_powers[k1] * gamma_part[k2]; the weight
// multiplying the order-j Pochhammer derivative in every m-term.
std::vector<Ext> combine_outer_sums(const std::vector<Ext>& log_powers,
                                    const std::vector<Ext>& gamma_part, int k) {
  std::vector<Ext> coeff(static_cast<std::size_t>(k) + 1, 0);
  for (int j = 0; j <= k; ++j) {
    Ext acc = 0;
    for (int k1 = 0; k1 <= k - j; ++k1) {
      acc += log_powers[static_cast<std::size_t>(k1)] *
             gamma_part[static_cast<std::size_t>(k - j - k1)];
    }
    coeff[static_cast<std::size_t>(j)] = acc;
  }
  return coeff;
}

}  // namespace

OrderSplit split_order(double nu) {
  if (!std::isfinite(nu)) throw std::invalid_argument("split_order: nu must be finite");
  // floor(nu + 0.5) can round up for nu just below a half-integer; decide
  // from the fractional part instead.
  double n = std::floor(nu);
  if (nu - n >= 0.5) n += 1.0;
  if (std::abs(n) > static_cast<double>(std::numeric_limits<int>::max())) {
    throw std::invalid_argument("split_order: |nu| too large");
  }
  return {nu, static_cast<int>(n), nu - n};
}

OrderSplit make_split(int N, double eps) {
  if (!(std::abs(eps) <= 0.5)) throw std::invalid_argument("make_split: |eps| must be <= 1/2");
  return {static_cast<double>(N) + eps, N, eps};
}

void SeriesConfig::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("SeriesConfig: tol must be > 0");
  if (max_terms < 10) throw std::invalid_argument("SeriesConfig: max_terms must be >= 10");
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::NonNegN: return "NonNegN";
    case Branch::NegN: return "NegN";
    case Branch::IntegerNonNeg: return "IntegerNonNeg";
    case Branch::IntegerNeg: return "IntegerNeg";
  }
  return "unknown";
}

bool within_supported_envelope(double nu, double z, int k) {
  return z > 0.0 && z <= kSupportedMaxZ && std::abs(nu) <= kSupportedMaxAbsNu && k >= 0 &&
         k <= kSupportedMaxK;
}

DerivativeResult dnu_bessel_j_split(const OrderSplit& split, double z, int k,
                                    const SeriesConfig& cfg) {
  check_argument(z, k);
  cfg.validate();
  if (!(std::abs(split.eps) <= 0.5)) {
    throw std::invalid_argument("dnu_bessel_j_split: |eps| must be <= 1/2");
  }
  const int N = split.N;
  const Ext eps = split.eps;
  const Ext half_z = static_cast<Ext>(z) / 2;
  const Ext x = -half_z * half_z;

  std::vector<Ext> gamma_part(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    gamma_part[static_cast<std::size_t>(j)] = recip_gamma_deriv_extended(j, eps) / factorial(j);
  }
  const auto coeff = combine_outer_sums(scaled_log_powers(std::log(half_z), k), gamma_part, k);

  const int head_count = N < 0 ? -N : 0;
  Ext weight = 1;  // x^m / m!

  // m < -N: 1/Gamma(nu+1+m) = (-1)^M (-eps)_M / Gamma(1+eps), M = -N-m.
  Table2D<Ext> poch;
  if (head_count > 0) poch = poch_deriv_table<Ext>(head_count, k, -eps);
  auto head = [&](int m) {
    const int M = head_count - m;
    Ext inner = 0;
    for (int j = 0; j <= k; ++j) inner += coeff[static_cast<std::size_t>(j)] * parity(M + j) * poch(M, j);
    const Ext term = weight * inner;
    weight *= x / static_cast<Ext>(m + 1);
    return term;
  };

  // m >= -N: 1/Gamma(nu+1+m) = 1 / (Gamma(1+eps) (1+eps)_{m+N}).
  BasicRecipPochColumn<Ext> recip{k, 1 + eps};
  for (int s = 0; s < N; ++s) recip.advance();
  auto tail = [&](int m) {
    Ext inner = 0;
    for (int j = 0; j <= k; ++j) inner += coeff[static_cast<std::size_t>(j)] * recip[j];
    const Ext term = weight * inner;
    weight *= x / static_cast<Ext>(m + 1);
    recip.advance();
    return term;
  };

  const auto series = sum_series(head_count, head, tail, cfg, "dnu_bessel_j");
  const Ext prefactor = factorial(k) * std::pow(half_z, static_cast<Ext>(split.nu));
  return {static_cast<double>(prefactor * series.sum), series.terms,
          N >= 0 ? Branch::NonNegN : Branch::NegN, series.tail};
}

double bessel_j(double nu, double z, const SeriesConfig& cfg) {
  return dnu_bessel_j_split(split_order(nu), z, 0, cfg).value;
}

DerivativeResult dnu_bessel_j(double nu, double z, int k, const SeriesConfig& cfg) {
  const OrderSplit split = split_order(nu);
  if (k >= 1 && split.eps == 0.0) return dnu_bessel_j_integer(split.N, z, k, cfg);
  return dnu_bessel_j_split(split, z, k, cfg);
}

DerivativeResult dnu_bessel_j_integer(int n, double z, int k, const SeriesConfig& cfg) {
  check_argument(z, k);
  cfg.validate();
  const GammaCoeffs& c = default_gamma_coeffs();
  const Ext half_z = static_cast<Ext>(z) / 2;
  const Ext x = -half_z * half_z;

  // G^(j)(1) / j! = c_{j+1}
  std::vector<Ext> gamma_part(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) gamma_part[static_cast<std::size_t>(j)] = c.extended(j + 1);
  const auto coeff = combine_outer_sums(scaled_log_powers(std::log(half_z), k), gamma_part, k);
  const Ext prefactor = factorial(k) * std::pow(half_z, static_cast<Ext>(n));

  BasicHarmonicColumn<Ext> harmonic{k};
  auto harmonic_sum = [&] {
    Ext inner = 0;
    for (int j = 0; j <= k; ++j) inner += coeff[static_cast<std::size_t>(j)] * parity(j) * harmonic[j];
    return inner;
  };

  if (n >= 0) {
    for (int s = 0; s < n; ++s) harmonic.advance();
    Ext weight = 1 / factorial(n);  // x^m / (m! (m+n)!)
    auto tail = [&](int m) {
      const Ext term = weight * harmonic_sum();
      weight *= x / (static_cast<Ext>(m + 1) * static_cast<Ext>(m + 1 + n));
      harmonic.advance();
      return term;
    };
    const auto series = sum_series(0, [](int) { return Ext(0); }, tail, cfg, "dnu_bessel_j_integer");
    return {static_cast<double>(prefactor * series.sum), series.terms, Branch::IntegerNonNeg,
            series.tail};
  }

  const int order = -n;
  const StirlingTable& stirling = default_stirling_table();
  Ext weight = 1;  // x^m / m! on the head, x^m / (m! (m-|n|)!) on the tail
  auto head = [&](int m) {
    Ext inner = 0;
    for (int j = 0; j <= k; ++j) {
      inner += coeff[static_cast<std::size_t>(j)] * stirling.as_long_double(order - m, j);
    }
    const Ext term = weight * inner;
    weight *= x / static_cast<Ext>(m + 1);
    return term;
  };
  auto tail = [&](int m) {
    const Ext term = weight * harmonic_sum();
    weight *= x / (static_cast<Ext>(m + 1) * static_cast<Ext>(m + 1 - order));
    harmonic.advance();
    return term;
  };
  const auto series = sum_series(order, head, tail, cfg, "dnu_bessel_j_integer");
  return {static_cast<double>(prefactor * series.sum), series.terms, Branch::IntegerNeg,
          series.tail};
}

double dnu_bessel_j_first(double nu, double z, const SeriesConfig& cfg) {
  check_argument(z, 1);
  cfg.validate();
  const OrderSplit split = split_order(nu);
  const int N = split.N;
  const Ext eps = split.eps;
  const Ext half_z = static_cast<Ext>(z) / 2;
  const Ext log_half_z = std::log(half_z);
  const Ext x = -half_z * half_z;
  const Ext j_nu = bessel_j(nu, z, cfg);

  if (eps == 0) {
    const Ext euler = 0.577215664901532860606512090082402431L;
    const int order = N >= 0 ? N : -N;
    Ext harmonic = 0;  // H_s
    if (N >= 0) {
      for (int s = 1; s <= order; ++s) harmonic += Ext(1) / s;
      Ext weight = 1 / factorial(order);
      auto tail = [&](int m) {
        const Ext term = weight * harmonic;
        weight *= x / (static_cast<Ext>(m + 1) * static_cast<Ext>(m + 1 + order));
        harmonic += Ext(1) / static_cast<Ext>(m + 1 + order);
        return term;
      };
      const auto series = sum_series(0, [](int) { return Ext(0); }, tail, cfg, "dnu_bessel_j_first");
      return static_cast<double>((log_half_z + euler) * j_nu -
                                 std::pow(half_z, static_cast<Ext>(order)) * series.sum);
    }
    // (-1)^n sum_{m<n} (z^2/4)^m / m! (n-m-1)!  +  sum_{m>=n} x^m / (m! (m-n)!) H_{m-n}
    Ext weight = 1;
    auto head = [&](int m) {
      const Ext term = parity(order) * parity(m) * weight * factorial(order - m - 1);
      weight *= x / static_cast<Ext>(m + 1);
      return term;
    };
    auto tail = [&](int m) {
      const Ext term = weight * harmonic;
      weight *= x / (static_cast<Ext>(m + 1) * static_cast<Ext>(m + 1 - order));
      harmonic += Ext(1) / static_cast<Ext>(m + 1 - order);
      return term;
    };
    const auto series = sum_series(order, head, tail, cfg, "dnu_bessel_j_first");
    return static_cast<double>((log_half_z + euler) * j_nu -
                               std::pow(half_z, static_cast<Ext>(-order)) * series.sum);
  }

  const int head_count = N < 0 ? -N : 0;
  const StirlingTable& stirling = default_stirling_table();
  Ext weight = 1;  // x^m / m!

  // sum_{j=0}^{M-1} (j+1) s(M, j+1) eps^j
  auto head = [&](int m) {
    const int M = head_count - m;
    Ext poly = 0;
    for (int j = M - 1; j >= 0; --j) {
      poly = poly * eps + static_cast<Ext>(j + 1) * stirling.as_long_double(M, j + 1);
    }
    const Ext term = weight * poly;
    weight *= x / static_cast<Ext>(m + 1);
    return term;
  };

  // sum_{j=1}^{s} (-1)^j / ((j-1)! (s-j)!) / (eps+j)^2, s = m+N; empty when s = 0.
  Ext inv_factorial = 1;  // 1/(s-1)!
  for (int s = 2; s < N; ++s) inv_factorial /= static_cast<Ext>(s - 1);
  auto tail = [&](int m) {
    const int s = m + N;
    Ext inner = 0;
    if (s > 0) {
      if (s > 1) inv_factorial /= static_cast<Ext>(s - 1);
      Ext w = inv_factorial;  // 1/((j-1)! (s-j)!) at j = 1
      for (int j = 1; j <= s; ++j) {
        const Ext d = eps + static_cast<Ext>(j);
        inner += parity(j) * w / (d * d);
        w *= static_cast<Ext>(s - j) / static_cast<Ext>(j);
      }
    }
    const Ext term = weight * inner;
    weight *= x / static_cast<Ext>(m + 1);
    return term;
  };

  const auto series = sum_series(head_count, head, tail, cfg, "dnu_bessel_j_first");
  // psi(1+eps) = -G^(1)(1+eps) / G^(0)(1+eps)
  const Ext g0 = recip_gamma_deriv_extended(0, eps);
  const Ext psi = -recip_gamma_deriv_extended(1, eps) / g0;
  return static_cast<double>((log_half_z - psi) * j_nu +
                             std::pow(half_z, static_cast<Ext>(nu)) * g0 * series.sum);
}

}  // namespace nuderiv
