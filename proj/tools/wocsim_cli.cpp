// Command-line front end for the simulation engine.
//
// Subcommands:
//   run    one seeded run; writes trace.csv and metrics.csv to --out
//   sweep  Cartesian lambda x rho x eta sweep; writes summary.csv to --out
//
// Exit codes: 0 success, 1 configuration error, 2 runtime invariant
// violation.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "wocsim/config_file.hpp"
#include "wocsim/errors.hpp"
#include "wocsim/harness.hpp"

namespace {

struct CommonFlags {
  std::string condition, signal_channel, shock_mode, config_path, out_dir = ".";
  int agents = -1, rounds = -1, kappa = -1, lambda = -1, replications = -1;
  double rho = -1.0, eta = -1.0;
  std::string seed;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--condition", f.condition, "solo | static | dynamic");
  cmd->add_option("--agents", f.agents, "group size");
  cmd->add_option("--rounds", f.rounds, "rounds per run");
  cmd->add_option("--kappa", f.kappa, "outgoing attention shares per agent");
  cmd->add_option("--lambda", f.lambda, "retrospective performance window");
  cmd->add_option("--rho", f.rho,
                  "mean rounds between shocks (switches to bernoulli shocks)");
  cmd->add_option("--eta", f.eta, "feedback noise sd");
  cmd->add_option("--seed", f.seed, "base seed (64-bit)");
  cmd->add_option("--replications", f.replications, "replications per cell");
  cmd->add_option("--signal-channel", f.signal_channel, "gaussian | scatter");
  cmd->add_option("--shock-mode", f.shock_mode, "deterministic | bernoulli");
  cmd->add_option("--config", f.config_path, "config file (key = value)");
  cmd->add_option("--out", f.out_dir, "output directory");
}

wocsim::LoadedConfig resolve(const CommonFlags& f) {
  wocsim::LoadedConfig config;
  if (!f.config_path.empty())
    config = wocsim::load_config_file(f.config_path);
  auto set = [&](const std::string& key, const std::string& value) {
    wocsim::apply_config_key(config, key, value);
  };
  if (!f.condition.empty()) set("condition", f.condition);
  if (f.agents >= 0) set("agents", std::to_string(f.agents));
  if (f.rounds >= 0) set("rounds", std::to_string(f.rounds));
  if (f.kappa >= 0) set("kappa", std::to_string(f.kappa));
  if (f.lambda >= 0) set("lambda", std::to_string(f.lambda));
  if (f.rho >= 0.0) set("rho", wocsim::format_double(f.rho));
  if (f.eta >= 0.0) set("eta", wocsim::format_double(f.eta));
  if (!f.seed.empty()) set("seed", f.seed);
  if (f.replications >= 0) set("replications", std::to_string(f.replications));
  if (!f.signal_channel.empty()) set("signal_channel", f.signal_channel);
  if (!f.shock_mode.empty()) set("shock_mode", f.shock_mode);
  return config;
}

std::filesystem::path prepare_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw wocsim::ConfigError("cannot create output directory: " + dir);
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive social-learning network simulator"};
  app.require_subcommand(1);

  CommonFlags run_flags, sweep_flags;
  auto* run_cmd = app.add_subcommand("run", "execute one seeded run");
  add_common(run_cmd, run_flags);
  auto* sweep_cmd =
      app.add_subcommand("sweep", "lambda x rho x eta parameter sweep");
  add_common(sweep_cmd, sweep_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // --help is a success, not an error
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage problems are configuration errors per the contract
  }

  try {
    if (run_cmd->parsed()) {
      auto config = resolve(run_flags);
      auto out = prepare_out_dir(run_flags.out_dir);
      auto trace = wocsim::run(config.run);
      wocsim::emit_trace(trace, (out / "trace.csv").string());
      wocsim::emit_metrics(trace, (out / "metrics.csv").string());
      std::cout << "wrote " << (out / "trace.csv").string() << " and "
                << (out / "metrics.csv").string() << "\n";
    } else {
      auto config = resolve(sweep_flags);
      auto out = prepare_out_dir(sweep_flags.out_dir);
      auto rows =
          wocsim::sweep(config.run, config.lambda_grid, config.rho_grid,
                        config.eta_grid, config.run.replications);
      wocsim::emit_summary(rows, (out / "summary.csv").string());
      std::cout << "wrote " << (out / "summary.csv").string() << "\n";
    }
  } catch (const wocsim::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const wocsim::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
