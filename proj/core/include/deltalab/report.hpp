#ifndef DELTALAB_REPORT_HPP
#define DELTALAB_REPORT_HPP

#include <json.hpp>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "deltalab/rational.hpp"

namespace deltalab::cli {

using exactcalc::Rational;

/// Batch-run configuration: defaults match the stock setup, every field can
/// come from a JSON config file and be overridden by a CLI flag.
struct RunConfig {
  std::string mollifier = "default";   // "default" | "alternate" | path
  std::string model = "heaviside";     // named model or path
  int p = 1;                           // derivative order of the net
  int order = 1;                       // J: highest delta-derivative extracted
  std::vector<Rational> sigmas;        // empty -> dyadic 2^-3..2^-8
  Rational plateau_core{1, 4};
  Rational plateau_radius{1, 2};
  int divergence_q = 2;
  double tolerance = 1e-2;             // extracted-vs-oracle, absolute
  std::string format = "json";         // json | csv
  std::string out;                     // empty -> stdout

  static RunConfig from_file(const std::string& path);
  void apply_json(const nlohmann::ordered_json& j);
  std::vector<Rational> schedule_or_default() const;
};

struct CheckRecord {
  std::string name;
  std::string expected;   // exact string or fixed-precision float
  std::string observed;
  bool pass = false;
  std::string note;       // empty unless the check carries a caveat
};

/// Machine-readable run result. JSON output is deterministic: fixed key
/// order, floats at fixed precision, exact rationals as canonical strings.
struct Report {
  std::string command;
  std::vector<CheckRecord> checks;
  long long wall_ms = 0;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
  /// Writes in the configured format to the configured destination.
  void emit(const RunConfig& cfg) const;
};

/// Deterministic float formatting used everywhere a float is reported.
std::string format_float(double v);
std::string format_complex(const std::complex<double>& v);

}  // namespace deltalab::cli

#endif
