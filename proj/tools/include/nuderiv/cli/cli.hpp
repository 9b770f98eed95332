#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nuderiv/oracle.hpp"
#include "nuderiv/order_derivative.hpp"

namespace nuderiv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagreement = 2;

enum class Format { Csv, Json, Plain };

struct SweepSpec {
  std::vector<double> nu_values;
  std::vector<double> z_values;
  std::vector<int> k_values;
  Format format = Format::Plain;
  SeriesConfig series;
  bool verify = false;
  double verify_tol = 1e-6;
  FdConfig fd;
};

struct Record {
  double nu = 0.0;
  double z = 0.0;
  int k = 0;
  DerivativeResult result;
  // Set only under --verify. NaN marks an oracle that does not cover k.
  std::optional<double> fd_oracle;
  std::optional<double> rec_oracle;
  std::optional<double> max_rel_disagreement;
};

/// Parses "a,b,c" or "start:stop:step". A range keeps grid points that lie
/// strictly less than half a step beyond stop. Throws std::invalid_argument.
[[nodiscard]] std::vector<double> parse_values(std::string_view text);

/// Relative difference, or absolute difference when |reference| < 1e-12.
[[nodiscard]] double disagreement(double reference, double other);

/// Records in nu-major, then z, then k order.
[[nodiscard]] std::vector<Record> evaluate(const SweepSpec& spec);

void write_records(const std::vector<Record>& records, Format format, bool verify,
                   std::ostream& out);

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nuderiv::cli
