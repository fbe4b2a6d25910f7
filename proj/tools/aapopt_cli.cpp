// Command-line front end: loads a JSON scenario config, runs the requested
// experiment, and writes deterministic CSV artifacts.
//
// Exit codes: 0 success, 2 configuration error, 3 infeasible scenario,
// 4 solver failed to converge.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aapopt/errors.hpp"
#include "aapopt/experiments.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_path;
  std::string solver;
  int points = 0;
};

void add_common_flags(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON scenario/experiment config")
      ->required();
  cmd->add_option("--out", opts.out_path, "output CSV path (overrides config output_path)");
  cmd->add_option("--solver", opts.solver, "solver selection: scp, mfp, oracle, all");
  cmd->add_option("--points", opts.points,
                  "sweep step count, or oracle grid size for non-sweep experiments");
}

int run_subcommand(const std::string& experiment, const CliOptions& opts) {
  nlohmann::json raw;
  {
    std::ifstream in(opts.config_path);
    if (!in) {
      std::cerr << "error: cannot open config: " << opts.config_path << '\n';
      return aapopt::kExitConfigError;
    }
    try {
      in >> raw;
    } catch (const nlohmann::json::parse_error& err) {
      std::cerr << "error: config is not valid JSON: " << err.what() << '\n';
      return aapopt::kExitConfigError;
    }
  }

  aapopt::SpecOverrides overrides;
  overrides.experiment = experiment;
  if (!opts.out_path.empty()) overrides.output_path = opts.out_path;
  if (!opts.solver.empty()) overrides.solver = opts.solver;
  if (opts.points > 0) overrides.points = opts.points;

  const aapopt::ExperimentSpec spec = aapopt::validate_config(raw, overrides);
  const int code = aapopt::run(spec);
  std::cerr << "wrote " << spec.output_path << " (config hash " << aapopt::config_hash(spec)
            << ")\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-efficient hover-altitude optimizer for an aerial access point"};
  app.require_subcommand(1);

  CliOptions opts;
  const char* subcommands[][2] = {
      {"solve", "run the selected solvers once and tabulate optimum altitude and efficiency"},
      {"sweep-altitude", "sample efficiency, sum rate, and energy across altitudes"},
      {"sweep-rate", "optimal altitude and efficiency versus the per-user rate floor, "
                     "for full and rotor-blind hover policies"},
      {"trace", "upper/lower bound trace of the final polyblock subproblem"},
      {"compare", "solver cross-check plus the rotor-blind altitude penalty"},
  };
  for (const auto& sc : subcommands) {
    add_common_flags(app.add_subcommand(sc[0], sc[1]), opts);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    // Help requests exit 0; any other command-line problem is a config error.
    const int code = app.exit(err);
    return code == 0 ? 0 : aapopt::kExitConfigError;
  }

  const std::string experiment = app.get_subcommands().front()->get_name();
  try {
    return run_subcommand(experiment, opts);
  } catch (const aapopt::ConfigError& err) {
    std::cerr << "config error: " << err.what() << '\n';
    return aapopt::kExitConfigError;
  } catch (const aapopt::InvalidParamsError& err) {
    std::cerr << "config error: " << err.what() << '\n';
    return aapopt::kExitConfigError;
  } catch (const aapopt::DegenerateEnergyError& err) {
    std::cerr << "config error: " << err.what() << '\n';
    return aapopt::kExitConfigError;
  } catch (const aapopt::InfeasibleError& err) {
    std::cerr << "infeasible: " << err.what() << '\n';
    return aapopt::kExitInfeasible;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
