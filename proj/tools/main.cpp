#include "tools/config.hpp"
#include "tools/report.hpp"
#include "tools/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using helimom::tool::RunConfig;

// --tol retargets whichever tolerance the chosen subcommand actually checks
// against; `all` tightens (or loosens) every stage at once.
void apply_tol_override(RunConfig& cfg, const std::string& command, double tol) {
  if (command == "verify" || command == "all") {
    cfg.tol.identity = tol;
    cfg.tol.finite_difference = tol;
  }
  if (command == "moments" || command == "all") cfg.tol.imag_residual = tol;
  if (command == "oracle" || command == "all") cfg.tol.oracle_relative = tol;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"momentum-space polarization, connection and moment verification driver"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::uint64_t seed = 0;
  int samples = 0, nodes = 0;
  double tol = 0.0;

  auto* opt_config =
      app.add_option("--config", config_path, "config file ('key = value' sections)");
  auto* opt_seed = app.add_option("--seed", seed, "sampler seed for the identity suites");
  auto* opt_samples = app.add_option(
      "--samples", samples, "identity-suite sample count (sets the algebraic and the "
                            "finite-difference counts together)");
  auto* opt_nodes = app.add_option("--nodes", nodes, "k-quadrature nodes per axis");
  auto* opt_tol = app.add_option(
      "--tol", tol, "override the tolerance the subcommand checks against (verify: identity "
                    "and finite-difference; moments: imaginary-residual; oracle: "
                    "oracle-relative; all: every one of them)");
  auto* opt_out = app.add_option(
      "--out", out_path, "write the record stream to this file instead of stdout");

  app.add_subcommand("verify", "randomized polarization-basis and connection identity suites")
      ->fallthrough();
  app.add_subcommand("moments", "k-space moment report for every configured packet")
      ->fallthrough();
  app.add_subcommand("oracle", "brute-force real-space cross-check of the k-space moments")
      ->fallthrough();
  app.add_subcommand("algebra", "derive the mode-operator commutator table and compare exactly")
      ->fallthrough();
  app.add_subcommand("all", "verify + moments + oracle + algebra")->fallthrough();

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  RunConfig cfg;
  try {
    if (opt_config->count()) cfg = helimom::tool::load_config(config_path);
    else cfg = helimom::tool::default_config();

    if (opt_seed->count()) cfg.seed = seed;
    if (opt_samples->count()) cfg.samples = cfg.fd_samples = samples;
    if (opt_nodes->count()) cfg.quadrature.nodes_per_axis = nodes;
    if (opt_tol->count()) apply_tol_override(cfg, command, tol);

    cfg.validate();
  } catch (const helimom::tool::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  helimom::tool::Report report;
  try {
    if (command == "verify") report = helimom::tool::run_verify(cfg);
    else if (command == "moments") report = helimom::tool::run_moments(cfg);
    else if (command == "oracle") report = helimom::tool::run_oracle(cfg);
    else if (command == "algebra") report = helimom::tool::run_algebra();
    else report = helimom::tool::run_all(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const bool ok = report.all_pass();
  const int checks = static_cast<int>(report.records().size());
  report.add({"summary", command, ok,
              std::to_string(checks) + " checks, " + std::to_string(report.failures()) +
                  " failures",
              {{"checks", checks}, {"failures", report.failures()}}});

  report.write_table(std::cout);

  if (opt_out->count()) {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    report.write_records(out);
  } else {
    std::cout << '\n';
    report.write_records(std::cout);
  }

  return ok ? 0 : 1;
}
