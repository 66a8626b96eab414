#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "deltalab/commands.hpp"

using namespace deltalab::cli;
using deltalab::exactcalc::rat;

namespace {

RunConfig quick_config() {
  RunConfig cfg;
  cfg.sigmas = {rat(1, 8), rat(1, 16), rat(1, 32)};
  return cfg;
}

}  // namespace

TEST_CASE("config files load and validate") {
  const char* path = "test_cli_config.json";
  {
    std::ofstream out(path);
    out << R"({"model": "nu_plus:1", "p": 2, "order": 2, "sigmas": ["1/8","1/16","1/32"],
               "tolerance": 0.02, "format": "csv"})";
  }
  const RunConfig cfg = RunConfig::from_file(path);
  CHECK(cfg.model == "nu_plus:1");
  CHECK(cfg.p == 2);
  CHECK(cfg.order == 2);
  CHECK(cfg.sigmas.size() == 3);
  CHECK(cfg.format == "csv");
  std::remove(path);

  CHECK_THROWS_AS(RunConfig::from_file("/does/not/exist.json"), std::invalid_argument);

  nlohmann::ordered_json bad{{"tolerance", -1.0}};
  RunConfig c;
  CHECK_THROWS_AS(c.apply_json(bad), std::invalid_argument);
  nlohmann::ordered_json badfmt{{"format", "xml"}};
  CHECK_THROWS_AS(c.apply_json(badfmt), std::invalid_argument);
}

TEST_CASE("verify-mollifier: all exact checks pass on both geometries") {
  for (const char* which : {"default", "alternate"}) {
    RunConfig cfg = quick_config();
    cfg.mollifier = which;
    const Report report = cmd_verify_mollifier(cfg);
    CHECK(report.all_pass());
    CHECK(report.checks.size() == 3 * 8);  // (3 conditions + 5 identities) x 3 sigmas
  }
}

TEST_CASE("associate: the step against its oracle") {
  RunConfig cfg;
  cfg.model = "heaviside";
  cfg.p = 1;
  cfg.order = 1;
  const Report report = cmd_associate(cfg);
  CHECK(report.all_pass());
  CHECK(report.command == "associate");
}

TEST_CASE("associate without an applicable oracle still reports") {
  RunConfig cfg = quick_config();
  // a smooth model converges for p = 3 too, but no closed form is wired there
  cfg.model = "constant:1";
  cfg.p = 3;
  cfg.order = 1;
  const Report report = cmd_associate(cfg);
  CHECK(report.all_pass());
  bool found_note = false;
  for (const auto& c : report.checks) found_note |= c.note.find("no closed-form") != std::string::npos;
  CHECK(found_note);
}

TEST_CASE("divergence command certifies the 1/eps rate") {
  RunConfig cfg;
  cfg.sigmas = {rat(1, 4), rat(1, 8), rat(1, 16), rat(1, 32)};
  const Report report = cmd_divergence(cfg);
  CHECK(report.all_pass());
}

TEST_CASE("reports are deterministic and wall time stays out of the payload") {
  RunConfig cfg = quick_config();
  const Report a = cmd_verify_mollifier(cfg);
  const Report b = cmd_verify_mollifier(cfg);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_json().dump().find("wall") == std::string::npos);
  CHECK(a.to_csv() == b.to_csv());
}

TEST_CASE("csv escapes fields containing commas") {
  Report r;
  r.command = "t";
  r.checks.push_back({"a,b", "1", "2", true, "note \"x\""});
  const std::string csv = r.to_csv();
  CHECK(csv.find("\"a,b\"") != std::string::npos);
  CHECK(csv.find("\"note \"\"x\"\"\"") != std::string::npos);
}

TEST_CASE("exit-code contract mirrors the verdicts") {
  Report ok;
  ok.checks.push_back({"x", "1", "1", true, ""});
  CHECK(ok.all_pass());
  Report bad = ok;
  bad.checks.push_back({"y", "1", "2", false, ""});
  CHECK_FALSE(bad.all_pass());
  CHECK(bad.failed() == 1);
  CHECK(bad.passed() == 1);
}
