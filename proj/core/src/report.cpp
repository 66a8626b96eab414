#include "deltalab/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace deltalab::cli {

using nlohmann::ordered_json;

std::string format_float(double v) {
  char buf[64];
  if (v == 0.0) v = 0.0;  // normalize -0
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

std::string format_complex(const std::complex<double>& v) {
  return "(" + format_float(v.real()) + ", " + format_float(v.imag()) + ")";
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad config JSON: " + std::string(e.what()));
  }
  RunConfig cfg;
  cfg.apply_json(j);
  return cfg;
}

void RunConfig::apply_json(const ordered_json& j) {
  if (j.contains("mollifier")) mollifier = j.at("mollifier").get<std::string>();
  if (j.contains("model")) model = j.at("model").get<std::string>();
  if (j.contains("p")) p = j.at("p").get<int>();
  if (j.contains("order")) order = j.at("order").get<int>();
  if (j.contains("sigmas")) {
    sigmas.clear();
    for (const auto& s : j.at("sigmas"))
      sigmas.push_back(exactcalc::parse_rational(s.get<std::string>()));
  }
  if (j.contains("plateau_core"))
    plateau_core = exactcalc::parse_rational(j.at("plateau_core").get<std::string>());
  if (j.contains("plateau_radius"))
    plateau_radius = exactcalc::parse_rational(j.at("plateau_radius").get<std::string>());
  if (j.contains("divergence_q")) divergence_q = j.at("divergence_q").get<int>();
  if (j.contains("tolerance")) tolerance = j.at("tolerance").get<double>();
  if (j.contains("format")) format = j.at("format").get<std::string>();
  if (j.contains("out")) out = j.at("out").get<std::string>();
  if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
  if (format != "json" && format != "csv")
    throw std::invalid_argument("format must be json or csv");
}

std::vector<Rational> RunConfig::schedule_or_default() const {
  if (!sigmas.empty()) return sigmas;
  std::vector<Rational> s;
  for (int i = 3; i <= 8; ++i) s.push_back(exactcalc::pow_rational(exactcalc::rat(1, 2), i));
  return s;
}

int Report::passed() const {
  int n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

int Report::failed() const { return static_cast<int>(checks.size()) - passed(); }

ordered_json Report::to_json() const {
  // wall_ms stays out of the serialized form: identical configs must produce
  // byte-identical reports.
  ordered_json j;
  j["command"] = command;
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["expected"] = c.expected;
    jc["observed"] = c.observed;
    jc["pass"] = c.pass;
    if (!c.note.empty()) jc["note"] = c.note;
    arr.push_back(std::move(jc));
  }
  j["checks"] = std::move(arr);
  j["summary"] = ordered_json{{"passed", passed()}, {"failed", failed()}};
  return j;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string Report::to_csv() const {
  std::string out = "command,name,expected,observed,pass,note\n";
  for (const auto& c : checks) {
    out += csv_escape(command) + "," + csv_escape(c.name) + "," + csv_escape(c.expected) + "," +
           csv_escape(c.observed) + "," + (c.pass ? "true" : "false") + "," + csv_escape(c.note) +
           "\n";
  }
  return out;
}

void Report::emit(const RunConfig& cfg) const {
  const std::string payload = cfg.format == "csv" ? to_csv() : to_json().dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw std::invalid_argument("cannot open output file '" + cfg.out + "'");
  file << payload;
}

}  // namespace deltalab::cli
