#include "aapopt/scenario_json.hpp"

#include <set>
#include <string>

#include "aapopt/errors.hpp"

namespace aapopt {

namespace {

std::string joined(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& known,
                         const std::string& prefix) {
  for (const auto& item : j.items()) {
    if (!known.contains(item.key())) {
      throw ConfigError(joined(prefix, item.key()), "unknown key");
    }
  }
}

double require_number(const nlohmann::json& j, const std::string& key,
                      const std::string& prefix) {
  if (!j.contains(key)) throw ConfigError(joined(prefix, key), "missing field");
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError(joined(prefix, key), "expected a number");
  return v.get<double>();
}

}  // namespace

ScenarioParams scenario_from_json(const nlohmann::json& j, const std::string& path_prefix) {
  if (!j.is_object()) throw ConfigError(path_prefix, "expected an object");
  reject_unknown_keys(j,
                      {"h0", "p_t_dbm", "p_h_w", "bandwidth_hz", "noise_psd_dbm_hz", "phi_deg",
                       "rho_ue", "hover_time_s", "r0_bps", "h_min_m", "h_max_m", "energy"},
                      path_prefix);

  ScenarioParams p;
  p.h0 = require_number(j, "h0", path_prefix);
  p.p_t_dbm = require_number(j, "p_t_dbm", path_prefix);
  p.p_h_w = require_number(j, "p_h_w", path_prefix);
  p.bandwidth_hz = require_number(j, "bandwidth_hz", path_prefix);
  p.noise_psd_dbm_hz = require_number(j, "noise_psd_dbm_hz", path_prefix);
  p.phi_deg = require_number(j, "phi_deg", path_prefix);
  p.rho_ue = require_number(j, "rho_ue", path_prefix);
  p.hover_time_s = require_number(j, "hover_time_s", path_prefix);
  p.r0_bps = require_number(j, "r0_bps", path_prefix);
  p.h_min_m = require_number(j, "h_min_m", path_prefix);
  p.h_max_m = require_number(j, "h_max_m", path_prefix);

  if (!j.contains("energy")) throw ConfigError(joined(path_prefix, "energy"), "missing field");
  const auto& je = j.at("energy");
  const std::string energy_prefix = joined(path_prefix, "energy");
  if (!je.is_object()) throw ConfigError(energy_prefix, "expected an object");
  reject_unknown_keys(je, {"alpha_cl", "beta_cl", "alpha_ho", "beta_ho"}, energy_prefix);
  p.energy.alpha_cl = require_number(je, "alpha_cl", energy_prefix);
  p.energy.beta_cl = require_number(je, "beta_cl", energy_prefix);
  p.energy.alpha_ho = require_number(je, "alpha_ho", energy_prefix);
  p.energy.beta_ho = require_number(je, "beta_ho", energy_prefix);
  return p;
}

nlohmann::json scenario_to_json(const ScenarioParams& p) {
  return nlohmann::json{
      {"h0", p.h0},
      {"p_t_dbm", p.p_t_dbm},
      {"p_h_w", p.p_h_w},
      {"bandwidth_hz", p.bandwidth_hz},
      {"noise_psd_dbm_hz", p.noise_psd_dbm_hz},
      {"phi_deg", p.phi_deg},
      {"rho_ue", p.rho_ue},
      {"hover_time_s", p.hover_time_s},
      {"r0_bps", p.r0_bps},
      {"h_min_m", p.h_min_m},
      {"h_max_m", p.h_max_m},
      {"energy",
       {{"alpha_cl", p.energy.alpha_cl},
        {"beta_cl", p.energy.beta_cl},
        {"alpha_ho", p.energy.alpha_ho},
        {"beta_ho", p.energy.beta_ho}}},
  };
}

nlohmann::json solve_result_to_json(const SolveResult& r) {
  nlohmann::json trace = nlohmann::json::array();
  for (const IterationRecord& rec : r.trace) {
    trace.push_back({{"k", rec.k},
                     {"h_k_m", rec.h_k},
                     {"l_k", rec.l_k},
                     {"subproblem_h_m", rec.subproblem_h}});
  }
  return nlohmann::json{{"h_opt_m", r.h_opt},
                        {"gee_opt", r.gee_opt},
                        {"iterations", r.iterations},
                        {"termination", to_string(r.termination)},
                        {"trace", std::move(trace)}};
}

nlohmann::json oracle_result_to_json(const OracleResult& r) {
  return nlohmann::json{{"h_star_m", r.h_star},
                        {"gee_star", r.gee_star},
                        {"grid_points", r.grid_points},
                        {"refined", r.refined}};
}

}  // namespace aapopt
