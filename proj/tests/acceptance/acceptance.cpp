// Acceptance suite: one [PASS]/[FAIL] line per criterion; exit status 1 if any fail.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "extended_oracles.hpp"
#include "nuderiv/nuderiv.hpp"

#ifdef NUDERIV_HAVE_CLI
#include "nuderiv/cli/cli.hpp"
#endif

using namespace nuderiv;
using nuderiv::testing::BigInteger;
using nuderiv::testing::BigRational;
using nuderiv::testing::rel_diff;

namespace {

constexpr double kNuGrid[] = {-2.5, -2.0, -0.3, 0.0, 0.5, 1.0, 3.7};
constexpr double kZGrid[] = {0.5, 1.0, 2.0, 5.0};

class Criterion {
 public:
  Criterion(int id, std::string title) : id_{id}, title_{std::move(title)} {}

  // Records a measured deviation against its bound.
  void measure(double deviation, double bound, const std::string& where) {
    ++checks_;
    const double ratio = deviation / bound;
    if (!(deviation <= bound)) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = where;
    }
    if (std::isnan(ratio) || ratio > worst_ratio_) {
      worst_ratio_ = std::isnan(ratio) ? INFINITY : ratio;
      worst_ = deviation;
      worst_bound_ = bound;
    }
  }

  // Records an exact comparison.
  void expect(bool ok, const std::string& where) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = where;
    }
  }

  void fail(const std::string& where) { expect(false, where); }

  bool report() const {
    const bool ok = failures_ == 0 && checks_ > 0;
    std::printf("[%s] %d. %s: %d checks", ok ? "PASS" : "FAIL", id_, title_.c_str(), checks_);
    if (worst_bound_ > 0) std::printf(", worst %.3g (bound %.0e)", worst_, worst_bound_);
    if (!ok) std::printf(", %d failed, first at %s", failures_, first_failure_.c_str());
    std::printf("\n");
    return ok;
  }

 private:
  int id_;
  std::string title_;
  int checks_ = 0;
  int failures_ = 0;
  double worst_ = 0.0;
  double worst_bound_ = 0.0;
  double worst_ratio_ = -1.0;
  std::string first_failure_;
};

std::string at(std::initializer_list<std::pair<const char*, double>> fields) {
  std::string s;
  for (const auto& [name, v] : fields) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%s=%.17g", s.empty() ? "" : " ", name, v);
    s += buf;
  }
  return s;
}

// Coefficients of (t)_m as a polynomial in t, lowest degree first.
std::vector<BigInteger> rising_polynomial(int m) {
  std::vector<BigInteger> p{1};
  for (int l = 0; l < m; ++l) {
    std::vector<BigInteger> next(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i] * l;
      next[i + 1] += p[i];
    }
    p = std::move(next);
  }
  return p;
}

// Taylor coefficients of p(t0 + u) in u.
std::vector<BigRational> shifted(const std::vector<BigInteger>& p, const BigRational& t0) {
  std::vector<BigRational> q(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    BigRational power = 1;  // t0^(i-j) walking j down from i
    for (std::size_t j = i + 1; j-- > 0;) {
      q[j] += BigRational(testing::binomial(static_cast<int>(i), static_cast<int>(j))) *
              BigRational(p[i]) * power;
      power *= t0;
    }
  }
  return q;
}

// First n Taylor coefficients of 1/f, f given by its Taylor coefficients.
std::vector<BigRational> reciprocal_series(const std::vector<BigRational>& f, int n) {
  std::vector<BigRational> g(static_cast<std::size_t>(n), 0);
  g[0] = BigRational(1) / f[0];
  for (int i = 1; i < n; ++i) {
    BigRational acc = 0;
    for (int j = 1; j <= i && j < static_cast<int>(f.size()); ++j) {
      acc += f[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(i - j)];
    }
    g[static_cast<std::size_t>(i)] = -acc / f[0];
  }
  return g;
}

bool criterion_combinatorics() {
  Criterion c{1, "combinatorial identities hold exactly (n, m <= 15, k <= 8)"};
  const StirlingTable& s = default_stirling_table();
  const HarmonicTable& h = default_harmonic_table();

  for (int m = 0; m <= 15; ++m) {
    const auto p = rising_polynomial(m);
    const auto at_zero = shifted(p, 0);
    const auto at_one = shifted(p, 1);
    const auto q_at_one = reciprocal_series(at_one, 9);
    for (int k = 0; k <= 8; ++k) {
      const std::string where = at({{"m", m}, {"k", k}});
      const BigRational p0 = k < static_cast<int>(at_zero.size()) ? at_zero[static_cast<std::size_t>(k)] : 0;
      const BigRational p1 = k < static_cast<int>(at_one.size()) ? at_one[static_cast<std::size_t>(k)] : 0;
      const int sign = (m - k) % 2 == 0 ? 1 : -1;

      // Derivatives at t = 0: signed Stirling numbers.
      if (m == 0 || k == 0) {
        c.expect(p0 == BigRational(m == k ? 1 : 0) && poch_deriv(m, k, 0.0) == (m == k ? 1.0 : 0.0), "P(0) trivial " + where);
      } else if (m >= k) {
        c.expect(p0 == BigRational(sign * s(m, k)), "P(0) " + where);
        c.expect(poch_deriv(m, k, 0.0) == static_cast<double>(p0), "P(0) double " + where);
      }
      // Derivatives at t = 1: shifted Stirling numbers.
      if (m >= k) {
        c.expect(p1 == BigRational(sign * s(m + 1, k + 1)), "P(1) " + where);
        c.expect(poch_deriv_at_one(m, k) == static_cast<double>(p1), "P(1) at_one " + where);
        c.expect(poch_deriv(m, k, 1.0) == static_cast<double>(p1), "P(1) double " + where);
      }
      // Orders above m vanish.
      if (k > m) {
        bool zero = p0 == 0 && p1 == 0;
        for (double t : {-0.4, 0.5, 2.3, 7.0}) zero = zero && poch_deriv(m, k, t) == 0.0;
        c.expect(zero, "P vanishing " + where);
      }
      // Q_m^(k)(1) = (-1)^k H_m^(k) / m!.
      const BigRational q = q_at_one[static_cast<std::size_t>(k)];
      const BigRational predicted =
          BigRational((k % 2 == 0 ? 1 : -1)) * h(m, k) / BigRational(testing::factorial_int(m));
      c.expect(q == predicted, "Q(1) " + where);
    }
    // First order is the ordinary harmonic number.
    BigRational harmonic = 0;
    for (int j = 1; j <= m; ++j) harmonic += BigRational(1, j);
    c.expect(h(m, 1) == harmonic, "H first order " + at({{"m", m}}));
  }
  // s(n+1,k+1) = n! sum_{j=k}^{n} (-1)^(n-j) s(j,k) / j!.
  for (int n = 0; n <= 15; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigRational acc = 0;
      for (int j = k; j <= n; ++j) {
        acc += BigRational((n - j) % 2 == 0 ? 1 : -1) * BigRational(s(j, k)) /
               BigRational(testing::factorial_int(j));
      }
      c.expect(acc * BigRational(testing::factorial_int(n)) == BigRational(s(n + 1, k + 1)),
               "Stirling sum " + at({{"n", n}, {"k", k}}));
    }
  }
  return c.report();
}

bool criterion_routes() {
  Criterion c{2, "Pochhammer recurrence vs explicit routes, and Leibniz product"};
  for (double t : {0.5, 1.0, 1.5, 2.3, -0.4}) {
    for (int m = 0; m <= 15; ++m) {
      for (int k = 0; k <= 6; ++k) {
        const std::string where = at({{"t", t}, {"m", m}, {"k", k}});
        c.measure(rel_diff(poch_deriv(m, k, t), poch_deriv_explicit(m, k, t), 1e-300), 1e-9, "P " + where);
        c.measure(rel_diff(recip_poch_deriv(m, k, t), recip_poch_deriv_explicit(m, k, t), 1e-300), 1e-9,
                  "Q " + where);
      }
    }
    for (int m = 0; m <= 12; ++m) {
      for (int k = 0; k <= 6; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += poch_deriv(m, j, t) * recip_poch_deriv(m, k - j, t);
        c.measure(std::abs(acc - (k == 0 ? 1.0 : 0.0)), 1e-10, "Leibniz " + at({{"t", t}, {"m", m}, {"k", k}}));
      }
    }
  }
  return c.report();
}

bool criterion_recip_gamma() {
  Criterion c{3, "1/Gamma derivatives vs 50-digit Richardson differences (k <= 6)"};
  for (int k = 1; k <= 6; ++k) {
    for (int i = -10; i <= 10; ++i) {
      const double eps = 0.05 * i;
      c.measure(rel_diff(recip_gamma_deriv(k, eps), testing::recip_gamma_fd(k, 1.0 + eps)), 1e-8,
                at({{"k", k}, {"eps", eps}}));
    }
  }
  return c.report();
}

bool criterion_triple_path() {
  Criterion c{4, "master series vs recurrence and finite-difference oracles on the 7x4x4 grid"};
  for (double nu : kNuGrid) {
    for (double z : kZGrid) {
      for (int k = 1; k <= 4; ++k) {
        const std::string where = at({{"nu", nu}, {"z", z}, {"k", k}});
        const double v = dnu_bessel_j(nu, z, k).value;
        const bool tiny = std::abs(v) < 1e-12;
        const double rec = oracle_recurrence(nu, z, k);
        const auto fd = oracle_finite_difference(nu, z, k);
        c.measure(tiny ? std::abs(v - rec) : rel_diff(v, rec), tiny ? 1e-12 : 1e-9, "rec " + where);
        c.measure(tiny ? std::abs(v - fd.value) : rel_diff(v, fd.value), tiny ? 1e-8 : 1e-6, "fd " + where);
        c.expect(fd.usable(), "fd unusable " + where);
      }
    }
  }
  return c.report();
}

bool criterion_specializations() {
  Criterion c{5, "integer-order and first-derivative forms vs the general engine"};
  const double zs[] = {0.5, 1.0, 2.0, 5.0};
  for (int n = -8; n <= 8; ++n) {
    for (double z : zs) {
      for (int k = 1; k <= 6; ++k) {
        const double general = dnu_bessel_j_split(make_split(n, 0.0), z, k).value;
        c.measure(rel_diff(dnu_bessel_j_integer(n, z, k).value, general), 1e-12,
                  "integer " + at({{"n", n}, {"z", z}, {"k", k}}));
      }
    }
  }
  for (double nu : {-4.3, -3.5, -3.0, -2.5, -2.0, -1.4, -1.0, -0.3, 0.0, 0.2, 0.5, 1.0, 2.0, 2.49, 3.7, 6.1}) {
    for (double z : zs) {
      const double general = dnu_bessel_j_split(split_order(nu), z, 1).value;
      c.measure(rel_diff(dnu_bessel_j_first(nu, z), general), 1e-12, "first " + at({{"nu", nu}, {"z", z}}));
    }
  }
  return c.report();
}

bool criterion_seams() {
  Criterion c{6, "half-integer orders agree under both splits (k <= 3)"};
  for (int N = -5; N <= 4; ++N) {
    for (double z : {0.5, 1.0, 2.0, 5.0}) {
      for (int k = 0; k <= 3; ++k) {
        const double lower = dnu_bessel_j_split(make_split(N, 0.5), z, k).value;
        const double upper = dnu_bessel_j_split(make_split(N + 1, -0.5), z, k).value;
        c.measure(rel_diff(lower, upper), 1e-10, at({{"nu", N + 0.5}, {"z", z}, {"k", k}}));
      }
    }
  }
  return c.report();
}

bool criterion_bessel() {
  Criterion c{7, "J at half-integer closed forms and J_{-n} = (-1)^n J_n"};
  constexpr double pi = std::numbers::pi;
  // Zeros of sin and cos fall back to an absolute comparison below 1e-12.
  for (double z : {pi / 2, pi}) {
    const double amp = std::sqrt(2.0 / (pi * z));
    c.measure(rel_diff(bessel_j(0.5, z), amp * std::sin(z)), 1e-12, at({{"nu", 0.5}, {"z", z}}));
    c.measure(rel_diff(bessel_j(-0.5, z), amp * std::cos(z)), 1e-12, at({{"nu", -0.5}, {"z", z}}));
  }
  for (int n = 0; n <= 8; ++n) {
    for (double z : {0.5, 1.0, 2.0, 5.0, pi / 2, pi}) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      c.measure(rel_diff(bessel_j(-n, z), sign * bessel_j(n, z)), 1e-12, at({{"n", n}, {"z", z}}));
    }
  }
  return c.report();
}

#ifdef NUDERIV_HAVE_CLI
struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

bool criterion_cli() {
  Criterion c{8, "CLI examples and --verify over the acceptance grid"};

  const auto single = cli({"--nu", "1.0", "--z", "2.0", "--k", "1", "--format", "plain"});
  char expected[64];
  std::snprintf(expected, sizeof expected, " value=%.17g ", dnu_bessel_j(1.0, 2.0, 1).value);
  const auto single_lines = lines_of(single.out);
  c.expect(single.code == 0 && single_lines.size() == 1 &&
               single_lines[0].find(expected) != std::string::npos,
           "plain example");

  const auto sweep = cli({"--nu", "0:2:0.5", "--z", "1", "--k", "1", "--k", "2", "--format", "csv"});
  const auto sweep_lines = lines_of(sweep.out);
  c.expect(sweep.code == 0, "csv example exit code");
  c.expect(sweep_lines.size() == 11, "csv example cardinality");
  c.expect(!sweep_lines.empty() && sweep_lines[0] == "nu,z,k,value,branch,terms_used,tail_estimate",
           "csv example header");

  const auto verified = cli({"--nu", "0.3", "--z", "1", "--k", "2", "--verify", "--verify-tol", "1e-6",
                             "--format", "csv"});
  const auto verified_lines = lines_of(verified.out);
  c.expect(verified.code == 0 && verified_lines.size() == 2, "verify example exit code");
  if (verified_lines.size() == 2) {
    const std::string& row = verified_lines[1];
    c.measure(std::stod(row.substr(row.rfind(',') + 1)), 1e-6, "verify example disagreement");
  }

  std::vector<std::string> grid{"--z", "0.5,1,2,5", "--k", "1", "--k", "2", "--k", "3", "--k", "4",
                                "--verify", "--format", "csv"};
  for (double nu : kNuGrid) grid.push_back("--nu=" + at({{"", nu}}).substr(1));
  const auto full = cli(grid);
  c.expect(full.code == 0, "verify over grid exit code");
  c.expect(lines_of(full.out).size() == 1 + 7 * 4 * 4, "verify over grid cardinality");

  const auto usage = cli({"--nu", "1", "--z", "-1", "--k", "1"});
  c.expect(usage.code == 1 && usage.out.empty(), "usage error");
  return c.report();
}
#endif

}  // namespace

int main() {
  std::vector<std::function<bool()>> criteria{criterion_combinatorics, criterion_routes,
                                              criterion_recip_gamma,   criterion_triple_path,
                                              criterion_specializations, criterion_seams,
                                              criterion_bessel};
#ifdef NUDERIV_HAVE_CLI
  criteria.emplace_back(criterion_cli);
#endif
  int failed = 0;
  for (const auto& criterion : criteria) {
    try {
      if (!criterion()) ++failed;
    } catch (const std::exception& e) {
      std::printf("[FAIL] criterion aborted: %s\n", e.what());
      ++failed;
    }
  }
#ifndef NUDERIV_HAVE_CLI
  std::printf("[FAIL] 8. CLI examples: built without tools\n");
  ++failed;
#endif
  return failed == 0 ? 0 : 1;
}
