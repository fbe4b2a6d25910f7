#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "aapopt/mfp.hpp"
#include "aapopt/scenario.hpp"
#include "aapopt/scp.hpp"

namespace aapopt {

enum class ExperimentKind {
  Solve,
  AltitudeSweep,
  RateSweep,
  ConvergenceTrace,
  RotorEnergyComparison,
};

enum class SolverChoice {
  Scp,
  Mfp,
  Oracle,
  All,
};

std::string to_string(ExperimentKind kind);
std::string to_string(SolverChoice solver);

struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
};

// Fully resolved description of one experiment run: scenario, experiment
// kind, sweep grid (present exactly for the sweep experiments), solver
// selection, solver settings, and the output file.
struct ExperimentSpec {
  ScenarioParams scenario;
  ExperimentKind experiment = ExperimentKind::Solve;
  std::optional<SweepRange> sweep;
  SolverChoice solver = SolverChoice::All;
  std::string output_path;
  ScpSettings scp;
  MfpSettings mfp;
  int oracle_points = 100000;
};

// Side-by-side of the full energy model against the rotor-energy-free hover
// policy. Both GEE values use the full energy model; the no-rotor altitude is
// where a planner ignoring rotor energy would hover.
struct ComparisonReport {
  double h_opt_scp = 0.0;
  double h_opt_mfp = 0.0;
  double h_opt_oracle = 0.0;
  double h_opt_no_rotor = 0.0;
  double altitude_gap_m = 0.0;  // h_opt_no_rotor - h_opt_oracle
  double gee_gain = 0.0;        // gee(h_opt_oracle) - gee(h_opt_no_rotor)
};

// Values the CLI layers over the configuration file (subcommand, flags).
struct SpecOverrides {
  std::optional<std::string> experiment;
  std::optional<std::string> solver;
  std::optional<std::string> output_path;
  std::optional<int> points;
};

// Validates the raw JSON document against the strict schema (unknown keys and
// missing fields are ConfigErrors naming the JSON path), merges CLI
// overrides, injects documented defaults (solver settings, sweep ranges), and
// returns the fully resolved spec. Throws ConfigError only.
ExperimentSpec validate_config(const nlohmann::json& raw, const SpecOverrides& overrides = {});

// Canonical JSON echo of a resolved spec; its dump is what gets hashed into
// the CSV metadata line and written next to the output file.
nlohmann::json resolved_config_json(const ExperimentSpec& spec);

// 16-hex-digit digest of the resolved config.
std::string config_hash(const ExperimentSpec& spec);

// Runs scp + mfp + oracle plus the zero-rotor re-solve on spec.scenario.
ComparisonReport comparison_report(const ExperimentSpec& spec);

// Executes the experiment and writes <output_path> plus the resolved-config
// echo <output_path>.config.json. Returns the process exit code: 0 on
// success, 4 when a solver exhausted its iteration budget (output still
// written). Throws InfeasibleError (exit 3 at the CLI) when the scenario
// itself is infeasible for a non-sweep experiment; infeasible sweep points
// become status=infeasible rows instead.
int run(const ExperimentSpec& spec);

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitNonConvergence = 4;

}  // namespace aapopt
