// deltalab: batch verification front-end for the exact singular-product engine.
//
//   deltalab verify-mollifier [--mollifier default] [--sigma 1/8,1/16,...]
//   deltalab associate --model heaviside --p 1 --order 1
//   deltalab table
//   deltalab divergence [--q 2]
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 invalid input.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "deltalab/commands.hpp"

namespace {

using deltalab::cli::RunConfig;

struct CommonFlags {
  std::string config;
  std::string mollifier;
  std::string model;
  int p = -1;
  int order = -1;
  std::string sigma_list;
  int q = -1;
  double tolerance = -1.0;
  std::string format;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config, "JSON config file; flags override its fields");
  cmd->add_option("--mollifier", flags.mollifier, "default | alternate | description file path");
  cmd->add_option("--model", flags.model, "model name, e.g. heaviside, nu_plus:1, abs_nu:1");
  cmd->add_option("--p", flags.p, "derivative order of the net in the product");
  cmd->add_option("--order", flags.order, "highest delta derivative extracted (J)");
  cmd->add_option("--sigma", flags.sigma_list, "comma-separated rational scales, e.g. 1/8,1/16");
  cmd->add_option("--q", flags.q, "moment order of the divergence bump");
  cmd->add_option("--tolerance", flags.tolerance, "absolute tolerance for extracted coefficients");
  cmd->add_option("--format", flags.format, "json | csv");
  cmd->add_option("--out", flags.out, "output path (default: stdout)");
}

RunConfig build_config(const CommonFlags& flags) {
  RunConfig cfg;
  if (!flags.config.empty()) cfg = RunConfig::from_file(flags.config);
  if (!flags.mollifier.empty()) cfg.mollifier = flags.mollifier;
  if (!flags.model.empty()) cfg.model = flags.model;
  if (flags.p >= 0) cfg.p = flags.p;
  if (flags.order >= 0) cfg.order = flags.order;
  if (flags.q >= 0) cfg.divergence_q = flags.q;
  if (flags.tolerance > 0) cfg.tolerance = flags.tolerance;
  if (!flags.format.empty()) cfg.format = flags.format;
  if (!flags.out.empty()) cfg.out = flags.out;
  if (!flags.sigma_list.empty()) {
    cfg.sigmas.clear();
    size_t start = 0;
    while (start <= flags.sigma_list.size()) {
      const size_t comma = flags.sigma_list.find(',', start);
      const std::string tok = flags.sigma_list.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      cfg.sigmas.push_back(deltalab::exactcalc::parse_rational(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (cfg.format != "json" && cfg.format != "csv")
    throw std::invalid_argument("format must be json or csv");
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic verification of delta-modelling mollifiers and their singular products"};
  app.require_subcommand(1);

  CommonFlags flags;
  CLI::App* verify = app.add_subcommand("verify-mollifier",
                                        "exact mollifier conditions and integral identities");
  CLI::App* associate = app.add_subcommand("associate",
                                           "extract association coefficients vs the oracle");
  CLI::App* table = app.add_subcommand("table", "full worked-products table, extracted vs oracle");
  CLI::App* divergence = app.add_subcommand("divergence",
                                            "squared delta embedding divergence certificate");
  for (auto* cmd : {verify, associate, table, divergence}) add_common(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : deltalab::cli::kExitBadInput;
  }

  try {
    const RunConfig cfg = build_config(flags);
    deltalab::cli::Report report;
    if (verify->parsed()) report = deltalab::cli::cmd_verify_mollifier(cfg);
    if (associate->parsed()) report = deltalab::cli::cmd_associate(cfg);
    if (table->parsed()) report = deltalab::cli::cmd_table(cfg);
    if (divergence->parsed()) report = deltalab::cli::cmd_divergence(cfg);
    report.emit(cfg);
    return report.all_pass() ? deltalab::cli::kExitPass : deltalab::cli::kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return deltalab::cli::kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return deltalab::cli::kExitBadInput;
  }
}
