#include "nuderiv/cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "nuderiv/errors.hpp"

namespace nuderiv::cli {
namespace {

constexpr std::size_t kMaxGridPoints = 1'000'000;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text) {
  const std::string_view s = trim(text);
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw std::invalid_argument("not a finite real number: '" + std::string{text} + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::string number(double v) { return fmt::format("{:.17g}", v); }

std::string json_number(double v) { return std::isfinite(v) ? number(v) : "null"; }

std::vector<double> collect_values(const std::vector<std::string>& texts) {
  std::vector<double> values;
  for (const auto& text : texts) {
    const auto parsed = parse_values(text);
    values.insert(values.end(), parsed.begin(), parsed.end());
  }
  return values;
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "plain") return Format::Plain;
  throw std::invalid_argument("--format must be one of csv, json, plain");
}

void validate(const SweepSpec& spec) {
  if (spec.nu_values.empty()) throw std::invalid_argument("--nu is required");
  if (spec.z_values.empty()) throw std::invalid_argument("--z is required");
  if (spec.k_values.empty()) throw std::invalid_argument("--k is required");
  for (double z : spec.z_values) {
    if (!(z > 0.0)) throw std::invalid_argument("all z values must be > 0 (got " + number(z) + ")");
  }
  for (int k : spec.k_values) {
    if (k < 0) throw std::invalid_argument("all k values must be >= 0");
  }
  const std::size_t points = spec.nu_values.size() * spec.z_values.size() * spec.k_values.size();
  if (points > kMaxGridPoints) throw std::invalid_argument("grid exceeds 1000000 points");
  spec.series.validate();
  if (spec.verify) {
    spec.fd.validate();
    if (!(spec.verify_tol > 0.0)) throw std::invalid_argument("--verify-tol must be > 0");
  }
}

double fd_oracle(const Record& r, const SweepSpec& spec) {
  if (r.k == 0) return static_cast<double>(bessel_j_direct(r.nu, r.z, spec.series));
  if (r.k > kMaxFdOrder) return kNaN;
  return oracle_finite_difference(r.nu, r.z, r.k, spec.fd, spec.series).value;
}

void verify(Record& r, const SweepSpec& spec) {
  r.fd_oracle = fd_oracle(r, spec);
  r.rec_oracle = oracle_recurrence(r.nu, r.z, r.k, spec.series);
  double worst = 0.0;
  for (double o : {*r.fd_oracle, *r.rec_oracle}) {
    if (!std::isnan(o)) worst = std::max(worst, disagreement(r.result.value, o));
  }
  r.max_rel_disagreement = worst;
}

void write_csv(const std::vector<Record>& records, bool with_verify, std::ostream& out) {
  out << "nu,z,k,value,branch,terms_used,tail_estimate";
  if (with_verify) out << ",fd_oracle,rec_oracle,max_rel_disagreement";
  out << '\n';
  for (const auto& r : records) {
    out << number(r.nu) << ',' << number(r.z) << ',' << r.k << ',' << number(r.result.value) << ','
        << to_string(r.result.branch) << ',' << r.result.terms_used << ','
        << number(r.result.tail_estimate);
    if (with_verify) {
      out << ',' << number(r.fd_oracle.value_or(kNaN)) << ','
          << number(r.rec_oracle.value_or(kNaN)) << ','
          << number(r.max_rel_disagreement.value_or(kNaN));
    }
    out << '\n';
  }
}

void write_json(const std::vector<Record>& records, bool with_verify, std::ostream& out) {
  out << '[';
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << (i == 0 ? "\n  {" : ",\n  {");
    out << "\"nu\": " << json_number(r.nu) << ", \"z\": " << json_number(r.z)
        << ", \"k\": " << r.k << ", \"value\": " << json_number(r.result.value)
        << ", \"branch\": \"" << to_string(r.result.branch)
        << "\", \"terms_used\": " << r.result.terms_used
        << ", \"tail_estimate\": " << json_number(r.result.tail_estimate);
    if (with_verify) {
      out << ", \"fd_oracle\": " << json_number(r.fd_oracle.value_or(kNaN))
          << ", \"rec_oracle\": " << json_number(r.rec_oracle.value_or(kNaN))
          << ", \"max_rel_disagreement\": " << json_number(r.max_rel_disagreement.value_or(kNaN));
    }
    out << '}';
  }
  out << (records.empty() ? "]\n" : "\n]\n");
}

void write_plain(const std::vector<Record>& records, bool with_verify, std::ostream& out) {
  for (const auto& r : records) {
    out << "nu=" << number(r.nu) << " z=" << number(r.z) << " k=" << r.k
        << " value=" << number(r.result.value) << " branch=" << to_string(r.result.branch)
        << " terms_used=" << r.result.terms_used
        << " tail_estimate=" << number(r.result.tail_estimate);
    if (with_verify) {
      out << " fd_oracle=" << number(r.fd_oracle.value_or(kNaN))
          << " rec_oracle=" << number(r.rec_oracle.value_or(kNaN))
          << " max_rel_disagreement=" << number(r.max_rel_disagreement.value_or(kNaN));
    }
    out << '\n';
  }
}

}  // namespace

std::vector<double> parse_values(std::string_view text) {
  const auto fields = split(text, ':');
  if (fields.size() == 3) {
    const double start = parse_real(fields[0]);
    const double stop = parse_real(fields[1]);
    const double step = parse_real(fields[2]);
    if (step == 0.0) throw std::invalid_argument("range step must be non-zero");
    const double span = (stop - start) / step;
    if (span < -0.5) throw std::invalid_argument("range step points away from stop: '" +
                                                 std::string{text} + "'");
    double last = std::floor(span + 0.5);
    if (last - span == 0.5) last -= 1.0;
    const double count = last + 1.0;
    if (count > static_cast<double>(kMaxGridPoints)) {
      throw std::invalid_argument("range has too many points: '" + std::string{text} + "'");
    }
    std::vector<double> values(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = start + static_cast<double>(i) * step;
    }
    return values;
  }
  if (fields.size() != 1) {
    throw std::invalid_argument("expected a list a,b,c or a range start:stop:step: '" +
                                std::string{text} + "'");
  }
  std::vector<double> values;
  for (auto part : split(text, ',')) values.push_back(parse_real(part));
  return values;
}

double disagreement(double reference, double other) {
  const double diff = std::abs(reference - other);
  if (std::isnan(diff)) return std::numeric_limits<double>::infinity();
  return std::abs(reference) < 1e-12 ? diff : diff / std::abs(reference);
}

std::vector<Record> evaluate(const SweepSpec& spec) {
  std::vector<Record> records;
  records.reserve(spec.nu_values.size() * spec.z_values.size() * spec.k_values.size());
  for (double nu : spec.nu_values) {
    for (double z : spec.z_values) {
      for (int k : spec.k_values) {
        Record r{nu, z, k, dnu_bessel_j(nu, z, k, spec.series), {}, {}, {}};
        if (spec.verify) verify(r, spec);
        records.push_back(std::move(r));
      }
    }
  }
  return records;
}

void write_records(const std::vector<Record>& records, Format format, bool with_verify,
                   std::ostream& out) {
  switch (format) {
    case Format::Csv: write_csv(records, with_verify, out); break;
    case Format::Json: write_json(records, with_verify, out); break;
    case Format::Plain: write_plain(records, with_verify, out); break;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order derivatives of the Bessel function J_nu(z)", "nuderiv"};
  std::vector<std::string> nu_texts;
  std::vector<std::string> z_texts;
  std::string format_name = "plain";
  SweepSpec spec;

  app.add_option("--nu", nu_texts, "orders: a,b,c or start:stop:step (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--z", z_texts, "arguments: a,b,c or start:stop:step (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--k", spec.k_values, "derivative order (repeatable)")->allow_extra_args(false);
  app.add_option("--tol", spec.series.tol, "series truncation tolerance")->capture_default_str();
  app.add_option("--max-terms", spec.series.max_terms, "series term cap")->capture_default_str();
  app.add_option("--format", format_name, "csv, json or plain")->capture_default_str();
  app.add_flag("--verify", spec.verify, "append oracle columns");
  app.add_option("--verify-tol", spec.verify_tol, "allowed oracle disagreement")
      ->capture_default_str();
  app.add_option("--fd-step", spec.fd.base_step, "finite-difference base step")
      ->capture_default_str();
  app.add_option("--fd-levels", spec.fd.levels, "Richardson levels")->capture_default_str();

  std::vector<const char*> argv{"nuderiv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "nuderiv: " << e.what() << '\n';
    return kExitUsage;
  }

  std::vector<Record> records;
  try {
    spec.nu_values = collect_values(nu_texts);
    spec.z_values = collect_values(z_texts);
    spec.format = parse_format(format_name);
    validate(spec);
    records = evaluate(spec);
  } catch (const std::exception& e) {
    err << "nuderiv: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  write_records(records, spec.format, spec.verify, buffer);
  out << buffer.str();

  if (spec.verify) {
    for (const auto& r : records) {
      if (!(*r.max_rel_disagreement <= spec.verify_tol)) {
        err << "nuderiv: oracle disagreement " << number(*r.max_rel_disagreement) << " at nu="
            << number(r.nu) << " z=" << number(r.z) << " k=" << r.k << '\n';
        return kExitDisagreement;
      }
    }
  }
  return kExitOk;
}

}  // namespace nuderiv::cli
