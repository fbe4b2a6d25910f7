#include "aapopt/experiments.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "aapopt/csv.hpp"
#include "aapopt/errors.hpp"
#include "aapopt/model.hpp"
#include "aapopt/oracle.hpp"
#include "aapopt/scenario_json.hpp"

namespace aapopt {

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Solve:
      return "solve";
    case ExperimentKind::AltitudeSweep:
      return "sweep-altitude";
    case ExperimentKind::RateSweep:
      return "sweep-rate";
    case ExperimentKind::ConvergenceTrace:
      return "trace";
    case ExperimentKind::RotorEnergyComparison:
      return "compare";
  }
  return "unknown";
}

std::string to_string(SolverChoice solver) {
  switch (solver) {
    case SolverChoice::Scp:
      return "scp";
    case SolverChoice::Mfp:
      return "mfp";
    case SolverChoice::Oracle:
      return "oracle";
    case SolverChoice::All:
      return "all";
  }
  return "unknown";
}

namespace {

ExperimentKind parse_experiment(const std::string& name, const std::string& path) {
  if (name == "solve") return ExperimentKind::Solve;
  if (name == "sweep-altitude") return ExperimentKind::AltitudeSweep;
  if (name == "sweep-rate") return ExperimentKind::RateSweep;
  if (name == "trace") return ExperimentKind::ConvergenceTrace;
  if (name == "compare") return ExperimentKind::RotorEnergyComparison;
  throw ConfigError(path, "unknown experiment '" + name +
                              "' (expected solve, sweep-altitude, sweep-rate, trace, compare)");
}

SolverChoice parse_solver(const std::string& name, const std::string& path) {
  if (name == "scp") return SolverChoice::Scp;
  if (name == "mfp") return SolverChoice::Mfp;
  if (name == "oracle") return SolverChoice::Oracle;
  if (name == "all") return SolverChoice::All;
  throw ConfigError(path, "unknown solver '" + name + "' (expected scp, mfp, oracle, all)");
}

double get_number(const nlohmann::json& j, const std::string& key, const std::string& path,
                  double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ConfigError(path + "." + key, "expected a number");
  return j.at(key).get<double>();
}

int get_int(const nlohmann::json& j, const std::string& key, const std::string& path,
            int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw ConfigError(path + "." + key, "expected an integer");
  return j.at(key).get<int>();
}

std::string get_string(const nlohmann::json& j, const std::string& key) {
  if (!j.at(key).is_string()) throw ConfigError(key, "expected a string");
  return j.at(key).get<std::string>();
}

ScpSettings parse_scp_settings(const nlohmann::json& j) {
  ScpSettings s;
  if (!j.is_object()) throw ConfigError("scp", "expected an object");
  for (const auto& item : j.items()) {
    if (item.key() != "zeta" && item.key() != "max_iters" && item.key() != "h_init_m") {
      throw ConfigError("scp." + item.key(), "unknown key");
    }
  }
  s.zeta = get_number(j, "zeta", "scp", s.zeta);
  s.max_iters = get_int(j, "max_iters", "scp", s.max_iters);
  if (j.contains("h_init_m")) {
    if (!j.at("h_init_m").is_number()) throw ConfigError("scp.h_init_m", "expected a number");
    s.h_init = j.at("h_init_m").get<double>();
  }
  if (!(s.zeta > 0.0)) throw ConfigError("scp.zeta", "must be > 0");
  if (s.max_iters < 1) throw ConfigError("scp.max_iters", "must be >= 1");
  return s;
}

MfpSettings parse_mfp_settings(const nlohmann::json& j) {
  MfpSettings s;
  if (!j.is_object()) throw ConfigError("mfp", "expected an object");
  for (const auto& item : j.items()) {
    static const std::set<std::string> known = {"zeta", "e", "max_outer", "max_inner",
                                                "bisection_tol"};
    if (!known.contains(item.key())) throw ConfigError("mfp." + item.key(), "unknown key");
  }
  s.zeta = get_number(j, "zeta", "mfp", s.zeta);
  s.e = get_number(j, "e", "mfp", s.e);
  s.max_outer = get_int(j, "max_outer", "mfp", s.max_outer);
  s.max_inner = get_int(j, "max_inner", "mfp", s.max_inner);
  s.bisection_tol = get_number(j, "bisection_tol", "mfp", s.bisection_tol);
  if (!(s.zeta > 0.0)) throw ConfigError("mfp.zeta", "must be > 0");
  if (!(s.e > 0.0)) throw ConfigError("mfp.e", "must be > 0");
  if (!(s.bisection_tol > 0.0)) throw ConfigError("mfp.bisection_tol", "must be > 0");
  if (s.max_outer < 1) throw ConfigError("mfp.max_outer", "must be >= 1");
  if (s.max_inner < 1) throw ConfigError("mfp.max_inner", "must be >= 1");
  return s;
}

SweepRange parse_sweep(const nlohmann::json& j, ExperimentKind kind) {
  if (!j.is_object()) throw ConfigError("sweep", "expected an object");
  for (const auto& item : j.items()) {
    if (item.key() != "start" && item.key() != "stop" && item.key() != "steps") {
      throw ConfigError("sweep." + item.key(), "unknown key");
    }
  }
  SweepRange r;
  if (!j.contains("start")) throw ConfigError("sweep.start", "missing field");
  if (!j.contains("stop")) throw ConfigError("sweep.stop", "missing field");
  if (!j.contains("steps")) throw ConfigError("sweep.steps", "missing field");
  r.start = get_number(j, "start", "sweep", 0.0);
  r.stop = get_number(j, "stop", "sweep", 0.0);
  r.steps = get_int(j, "steps", "sweep", 0);
  if (r.steps < 2) throw ConfigError("sweep.steps", "must be >= 2");
  if (!(r.start < r.stop)) throw ConfigError("sweep.stop", "must exceed sweep.start");
  const double floor = kind == ExperimentKind::AltitudeSweep ? 1.0 : 0.0;
  if (!(r.start >= floor)) {
    throw ConfigError("sweep.start", kind == ExperimentKind::AltitudeSweep
                                         ? "altitude sweep must start at >= 1 m"
                                         : "rate sweep must start at >= 0");
  }
  return r;
}

// Maps a parameter-validation message ("phi_deg must be ...") to a ConfigError
// whose path points into the scenario object.
[[noreturn]] void rethrow_as_config_error(const InvalidParamsError& err) {
  const std::string what = err.what();
  const auto space = what.find(' ');
  const std::string field = space == std::string::npos ? what : what.substr(0, space);
  throw ConfigError("scenario." + field, space == std::string::npos ? "invalid"
                                                                    : what.substr(space + 1));
}

ScenarioParams zero_rotor(const ScenarioParams& params) {
  ScenarioParams p = params;
  p.energy = EnergyConstants{};
  return p;
}

// Altitude decision for one sweep point under the requested solver. Sweeps
// default to the oracle (All behaves as Oracle here: deterministic and
// independent of either iterative path). Returns the altitude and whether the
// solver converged.
std::pair<double, bool> solve_altitude(const ScenarioParams& params, const ExperimentSpec& spec) {
  switch (spec.solver) {
    case SolverChoice::Scp: {
      const SolveResult r = scp_optimize(params, spec.scp);
      return {r.h_opt, r.termination == Termination::Converged};
    }
    case SolverChoice::Mfp: {
      const MfpResult r = mfp_optimize(params, spec.mfp);
      return {r.result.h_opt, r.result.termination == Termination::Converged};
    }
    case SolverChoice::Oracle:
    case SolverChoice::All: {
      const OracleResult r = grid_argmax(params, spec.oracle_points);
      return {r.h_star, true};
    }
  }
  throw InvalidParamsError("unreachable solver choice");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path);
  out << content;
  if (!out) throw Error("failed writing output file: " + path);
}

void write_outputs(const ExperimentSpec& spec, const std::string& csv_body) {
  std::string csv = "# config_hash=" + config_hash(spec) + "\n" + csv_body;
  write_file(spec.output_path, csv);
  write_file(spec.output_path + ".config.json", resolved_config_json(spec).dump(2) + "\n");
}

int run_solve(const ExperimentSpec& spec) {
  const bool want_scp = spec.solver == SolverChoice::Scp || spec.solver == SolverChoice::All;
  const bool want_mfp = spec.solver == SolverChoice::Mfp || spec.solver == SolverChoice::All;
  const bool want_oracle =
      spec.solver == SolverChoice::Oracle || spec.solver == SolverChoice::All;

  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };

  std::ostringstream csv;
  csv << "solver,h_opt_m,gee,iterations,wall_time_ms\n";
  nlohmann::json report = nlohmann::json::object();
  bool all_converged = true;

  if (want_scp) {
    const auto t0 = clock::now();
    const SolveResult r = scp_optimize(spec.scenario, spec.scp);
    const double ms = ms_since(t0);
    all_converged = all_converged && r.termination == Termination::Converged;
    csv << "scp," << format_sci(r.h_opt) << ',' << format_sci(r.gee_opt) << ',' << r.iterations
        << ',' << format_sci(ms) << '\n';
    report["scp"] = solve_result_to_json(r);
  }
  if (want_mfp) {
    const auto t0 = clock::now();
    const MfpResult r = mfp_optimize(spec.scenario, spec.mfp);
    const double ms = ms_since(t0);
    all_converged = all_converged && r.result.termination == Termination::Converged;
    csv << "mfp," << format_sci(r.result.h_opt) << ',' << format_sci(r.result.gee_opt) << ','
        << r.result.iterations << ',' << format_sci(ms) << '\n';
    report["mfp"] = solve_result_to_json(r.result);
  }
  if (want_oracle) {
    const auto t0 = clock::now();
    const OracleResult r = grid_argmax(spec.scenario, spec.oracle_points);
    const double ms = ms_since(t0);
    csv << "oracle," << format_sci(r.h_star) << ',' << format_sci(r.gee_star) << ','
        << r.grid_points << ',' << format_sci(ms) << '\n';
    report["oracle"] = oracle_result_to_json(r);
  }

  write_outputs(spec, csv.str());
  std::cout << report.dump(2) << '\n';
  return all_converged ? kExitOk : kExitNonConvergence;
}

int run_altitude_sweep(const ExperimentSpec& spec) {
  const SweepRange range = *spec.sweep;
  // Sample the full curve with the rate cap ignored, like the plotting curve.
  ScenarioParams uncapped = spec.scenario;
  uncapped.r0_bps = 0.0;
  const DerivedCoefficients coeffs = derive_coefficients(uncapped);

  std::ostringstream csv;
  csv << "h_m,gee,sum_rate_bits_per_hz,energy_j\n";
  for (int i = 0; i < range.steps; ++i) {
    const double h =
        range.start + (range.stop - range.start) * static_cast<double>(i) / (range.steps - 1);
    const double rate = sum_rate(coeffs, h);
    const double e_total = energy(spec.scenario, coeffs, h).e_total_j;
    csv << format_sci(h) << ',' << format_sci(rate / e_total) << ',' << format_sci(rate) << ','
        << format_sci(e_total) << '\n';
  }
  write_outputs(spec, csv.str());
  return kExitOk;
}

int run_rate_sweep(const ExperimentSpec& spec) {
  const SweepRange range = *spec.sweep;
  std::ostringstream csv;
  csv << "r0_bps,h_opt_m,gee,h_opt_no_rotor_m,gee_no_rotor_policy,status\n";
  bool all_converged = true;

  for (int i = 0; i < range.steps; ++i) {
    const double r0 =
        range.start + (range.stop - range.start) * static_cast<double>(i) / (range.steps - 1);
    ScenarioParams full = spec.scenario;
    full.r0_bps = r0;
    const ScenarioParams zeroed = zero_rotor(full);

    csv << format_sci(r0) << ',';
    try {
      const auto [h_full, ok_full] = solve_altitude(full, spec);
      const auto [h_zero, ok_zero] = solve_altitude(zeroed, spec);
      all_converged = all_converged && ok_full && ok_zero;
      // Both hover policies are scored with the full energy model; the
      // zero-rotor altitude is where a rotor-blind planner would hover.
      const DerivedCoefficients coeffs = derive_coefficients(full);
      csv << format_sci(h_full) << ',' << format_sci(gee(full, coeffs, h_full)) << ','
          << format_sci(h_zero) << ',' << format_sci(gee(full, coeffs, h_zero)) << ",ok\n";
    } catch (const InfeasibleError&) {
      csv << ",,,,infeasible\n";
    }
  }
  write_outputs(spec, csv.str());
  return all_converged ? kExitOk : kExitNonConvergence;
}

int run_trace(const ExperimentSpec& spec) {
  const MfpResult r = mfp_optimize(spec.scenario, spec.mfp);
  std::ostringstream csv;
  csv << "iteration,f_max,f_min\n";
  for (const BoundsRecord& rec : r.inner_traces.back()) {
    csv << rec.iteration << ',' << format_sci(rec.f_max) << ',' << format_sci(rec.f_min) << '\n';
  }
  write_outputs(spec, csv.str());
  return r.result.termination == Termination::Converged ? kExitOk : kExitNonConvergence;
}

int run_compare(const ExperimentSpec& spec) {
  const ComparisonReport report = comparison_report(spec);
  std::ostringstream csv;
  csv << "h_opt_scp_m,h_opt_mfp_m,h_opt_oracle_m,h_opt_no_rotor_m,altitude_gap_m,gee_gain\n";
  csv << format_sci(report.h_opt_scp) << ',' << format_sci(report.h_opt_mfp) << ','
      << format_sci(report.h_opt_oracle) << ',' << format_sci(report.h_opt_no_rotor) << ','
      << format_sci(report.altitude_gap_m) << ',' << format_sci(report.gee_gain) << '\n';
  write_outputs(spec, csv.str());
  std::cout << csv.str();
  return kExitOk;
}

}  // namespace

ExperimentSpec validate_config(const nlohmann::json& raw, const SpecOverrides& overrides) {
  if (!raw.is_object()) throw ConfigError("", "top-level config must be a JSON object");
  for (const auto& item : raw.items()) {
    static const std::set<std::string> known = {"scenario", "experiment", "sweep",
                                                "solver",   "output_path", "scp",
                                                "mfp",      "oracle"};
    if (!known.contains(item.key())) throw ConfigError(item.key(), "unknown key");
  }

  ExperimentSpec spec;
  if (!raw.contains("scenario")) throw ConfigError("scenario", "missing field");
  spec.scenario = scenario_from_json(raw.at("scenario"), "scenario");
  try {
    validate_params(spec.scenario);
  } catch (const InvalidParamsError& err) {
    rethrow_as_config_error(err);
  }

  std::optional<std::string> experiment_name;
  if (raw.contains("experiment")) experiment_name = get_string(raw, "experiment");
  if (overrides.experiment) {
    if (experiment_name && *experiment_name != *overrides.experiment) {
      throw ConfigError("experiment", "config says '" + *experiment_name +
                                          "' but the subcommand requested '" +
                                          *overrides.experiment + "'");
    }
    experiment_name = overrides.experiment;
  }
  if (!experiment_name) throw ConfigError("experiment", "missing field");
  spec.experiment = parse_experiment(*experiment_name, "experiment");

  std::string solver_name = raw.contains("solver") ? get_string(raw, "solver") : "all";
  if (overrides.solver) solver_name = *overrides.solver;
  spec.solver = parse_solver(solver_name, "solver");

  spec.scp = raw.contains("scp") ? parse_scp_settings(raw.at("scp")) : ScpSettings{};
  spec.mfp = raw.contains("mfp") ? parse_mfp_settings(raw.at("mfp")) : MfpSettings{};
  if (raw.contains("oracle")) {
    const auto& jo = raw.at("oracle");
    if (!jo.is_object()) throw ConfigError("oracle", "expected an object");
    for (const auto& item : jo.items()) {
      if (item.key() != "points") throw ConfigError("oracle." + item.key(), "unknown key");
    }
    spec.oracle_points = get_int(jo, "points", "oracle", spec.oracle_points);
  }
  if (overrides.points && spec.experiment != ExperimentKind::AltitudeSweep &&
      spec.experiment != ExperimentKind::RateSweep) {
    spec.oracle_points = *overrides.points;
  }
  if (spec.oracle_points < 3) throw ConfigError("oracle.points", "must be >= 3");

  const bool is_sweep = spec.experiment == ExperimentKind::AltitudeSweep ||
                        spec.experiment == ExperimentKind::RateSweep;
  if (raw.contains("sweep")) {
    if (!is_sweep) throw ConfigError("sweep", "only sweep experiments take a sweep block");
    spec.sweep = parse_sweep(raw.at("sweep"), spec.experiment);
  } else if (spec.experiment == ExperimentKind::AltitudeSweep) {
    spec.sweep = SweepRange{spec.scenario.h_min_m, spec.scenario.h_max_m, 1000};
  } else if (spec.experiment == ExperimentKind::RateSweep) {
    // Default straddles the plateau/decay crossover of the baseline scenario
    // (~73 Mbps) on an exact 2.5 Mbps grid.
    spec.sweep = SweepRange{5e6, 1.2e8, 47};
  }
  if (spec.sweep && overrides.points) {
    if (*overrides.points < 2) throw ConfigError("sweep.steps", "must be >= 2");
    spec.sweep->steps = *overrides.points;
  }

  if (raw.contains("output_path")) spec.output_path = get_string(raw, "output_path");
  if (overrides.output_path) spec.output_path = *overrides.output_path;
  if (spec.output_path.empty()) spec.output_path = to_string(spec.experiment) + ".csv";

  return spec;
}

nlohmann::json resolved_config_json(const ExperimentSpec& spec) {
  nlohmann::json j{
      {"scenario", scenario_to_json(spec.scenario)},
      {"experiment", to_string(spec.experiment)},
      {"solver", to_string(spec.solver)},
      {"output_path", spec.output_path},
      {"scp", {{"zeta", spec.scp.zeta}, {"max_iters", spec.scp.max_iters}}},
      {"mfp",
       {{"zeta", spec.mfp.zeta},
        {"e", spec.mfp.e},
        {"max_outer", spec.mfp.max_outer},
        {"max_inner", spec.mfp.max_inner},
        {"bisection_tol", spec.mfp.bisection_tol}}},
      {"oracle", {{"points", spec.oracle_points}}},
  };
  if (spec.scp.h_init) j["scp"]["h_init_m"] = *spec.scp.h_init;
  if (spec.sweep) {
    j["sweep"] = {{"start", spec.sweep->start},
                  {"stop", spec.sweep->stop},
                  {"steps", spec.sweep->steps}};
  }
  return j;
}

std::string config_hash(const ExperimentSpec& spec) {
  return hash_hex(resolved_config_json(spec).dump());
}

ComparisonReport comparison_report(const ExperimentSpec& spec) {
  const ScenarioParams& full = spec.scenario;
  const DerivedCoefficients coeffs = derive_coefficients(full);

  ComparisonReport report;
  report.h_opt_scp = scp_optimize(full, spec.scp).h_opt;
  report.h_opt_mfp = mfp_optimize(full, spec.mfp).result.h_opt;
  report.h_opt_oracle = grid_argmax(full, spec.oracle_points).h_star;
  report.h_opt_no_rotor = grid_argmax(zero_rotor(full), spec.oracle_points).h_star;
  report.altitude_gap_m = report.h_opt_no_rotor - report.h_opt_oracle;
  // Both altitudes scored under the full energy model: the gain is what
  // accounting for rotor energy when placing the AAP is worth.
  report.gee_gain =
      gee(full, coeffs, report.h_opt_oracle) - gee(full, coeffs, report.h_opt_no_rotor);
  return report;
}

int run(const ExperimentSpec& spec) {
  switch (spec.experiment) {
    case ExperimentKind::Solve:
      return run_solve(spec);
    case ExperimentKind::AltitudeSweep:
      return run_altitude_sweep(spec);
    case ExperimentKind::RateSweep:
      return run_rate_sweep(spec);
    case ExperimentKind::ConvergenceTrace:
      return run_trace(spec);
    case ExperimentKind::RotorEnergyComparison:
      return run_compare(spec);
  }
  throw InvalidParamsError("unreachable experiment kind");
}

}  // namespace aapopt
