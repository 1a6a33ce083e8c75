// Command-line front end: configure and run the gate, phase, scan, and
// verify experiments, writing machine-readable reports and plot-ready CSV.

#include "darkgate/commands.hpp"
#include "darkgate/config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

struct Cli {
  std::string config_path;
  darkgate::CliOverrides overrides;
};

void add_common_options(CLI::App* cmd, Cli& cli) {
  cmd->add_option("--config", cli.config_path, "JSON config file");
  cmd->add_option("--out", cli.overrides.output_dir, "output directory");
  cmd->add_option("--omega-t", cli.overrides.omega_t,
                  "dimensionless adiabaticity product omega * T");
  cmd->add_option("--steps", cli.overrides.steps_per_stage,
                  "propagation steps per stage");
  cmd->add_option("--samples", cli.overrides.path_samples,
                  "fiber path samples per stage");
  cmd->add_option("--seed", cli.overrides.seed,
                  "seed for randomized property checks");
}

darkgate::ExperimentConfig resolve_config(const Cli& cli) {
  darkgate::ExperimentConfig config;
  if (!cli.config_path.empty()) {
    config = darkgate::load_config_file(cli.config_path);
  }
  darkgate::apply_overrides(config, cli.overrides);
  config.validate();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Adiabatic dark-state conditional phase gate: Schroedinger dynamics "
      "and discrete holonomy, cross-checked"};
  app.require_subcommand(1);

  Cli cli;
  CLI::App* gate = app.add_subcommand(
      "gate", "propagate the two-stage schedule and extract the logical gate");
  CLI::App* phase = app.add_subcommand(
      "phase", "geometric route: transport phases, Wilson line, solid angle");
  CLI::App* scan = app.add_subcommand(
      "scan", "leakage and gate error across a grid of omega*T values");
  CLI::App* verify =
      app.add_subcommand("verify", "run every library invariant suite");
  for (CLI::App* cmd : {gate, phase, scan, verify}) {
    add_common_options(cmd, cli);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors map to exit code 2
  }

  try {
    const darkgate::ExperimentConfig config = resolve_config(cli);
    if (gate->parsed()) return darkgate::cmd_gate(config);
    if (phase->parsed()) return darkgate::cmd_phase(config);
    if (scan->parsed()) return darkgate::cmd_scan(config);
    return darkgate::cmd_verify(config);
  } catch (const darkgate::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
