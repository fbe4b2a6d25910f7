#include "aapopt/scenario.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "aapopt/errors.hpp"

namespace aapopt {

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParamsError(message);
}

}  // namespace

void validate_params(const ScenarioParams& p) {
  require(std::isfinite(p.h0) && p.h0 > 0.0, "h0 must be > 0");
  require(std::isfinite(p.p_t_dbm), "p_t_dbm must be finite");
  require(std::isfinite(p.p_h_w) && p.p_h_w >= 0.0, "p_h_w must be >= 0");
  require(std::isfinite(p.bandwidth_hz) && p.bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
  require(std::isfinite(p.noise_psd_dbm_hz), "noise_psd_dbm_hz must be finite");
  require(std::isfinite(p.phi_deg) && p.phi_deg > 0.0 && p.phi_deg < 90.0,
          "phi_deg must be in (0, 90)");
  require(std::isfinite(p.rho_ue) && p.rho_ue > 0.0, "rho_ue must be > 0");
  require(std::isfinite(p.hover_time_s) && p.hover_time_s > 0.0, "hover_time_s must be > 0");
  require(std::isfinite(p.r0_bps) && p.r0_bps >= 0.0, "r0_bps must be >= 0");
  require(std::isfinite(p.h_min_m) && p.h_min_m >= 1.0, "h_min_m must be >= 1");
  require(std::isfinite(p.h_max_m) && p.h_max_m > p.h_min_m, "h_max_m must be > h_min_m");
  const EnergyConstants& e = p.energy;
  require(std::isfinite(e.alpha_cl) && e.alpha_cl >= 0.0, "energy.alpha_cl must be >= 0");
  require(std::isfinite(e.beta_cl), "energy.beta_cl must be finite");
  require(std::isfinite(e.alpha_ho) && e.alpha_ho >= 0.0, "energy.alpha_ho must be >= 0");
  require(std::isfinite(e.beta_ho) && e.beta_ho >= 0.0, "energy.beta_ho must be >= 0");
  // beta_cl may be negative (the fitted climb offset is), but climb energy
  // must stay positive from the lowest allowed altitude up. With
  // alpha_cl >= 0 checking the lower end suffices.
  require(e.alpha_cl * p.h_min_m + e.beta_cl > 0.0 || (e.alpha_cl == 0.0 && e.beta_cl == 0.0),
          "energy.beta_cl makes climb energy nonpositive at h_min_m");
}

DerivedCoefficients derive_coefficients(const ScenarioParams& p) {
  validate_params(p);

  DerivedCoefficients c;
  c.p_t_w = dbm_to_watts(p.p_t_dbm);
  c.sigma2_w = dbm_to_watts(p.noise_psd_dbm_hz) * p.bandwidth_hz;

  const double phi = p.phi_deg * std::numbers::pi / 180.0;
  const double cot2 = 1.0 / (std::tan(phi) * std::tan(phi));
  const double sin2 = std::sin(phi) * std::sin(phi);
  c.beta = c.p_t_w * p.h0 * sin2 / (std::numbers::pi * p.rho_ue * cot2 * c.sigma2_w);
  c.c_rate = p.hover_time_s * p.rho_ue * std::numbers::pi * cot2;

  if (p.r0_bps == 0.0) {
    c.h_cap_rate = std::numeric_limits<double>::infinity();
  } else {
    // Largest altitude at which the edge rate W*log2(1 + beta/h^4) still
    // meets r0: h = [beta / (2^(r0/W) - 1)]^(1/4).
    const double denom = std::exp2(p.r0_bps / p.bandwidth_hz) - 1.0;
    c.h_cap_rate = std::pow(c.beta / denom, 0.25);
  }

  c.h_lo = p.h_min_m;
  c.h_hi = std::min(p.h_max_m, c.h_cap_rate);
  if (!(c.h_lo <= c.h_hi)) {
    throw InfeasibleError("rate requirement caps altitude below h_min_m (h_cap_rate = " +
                          std::to_string(c.h_cap_rate) + " m)");
  }

  // Total energy is affine in h; positivity at both interval ends implies
  // positivity throughout.
  const EnergyConstants& e = p.energy;
  auto e_total = [&](double h) {
    return e.alpha_cl * h + e.beta_cl + (e.alpha_ho * h + e.beta_ho) * p.hover_time_s +
           (c.p_t_w + p.p_h_w) * p.hover_time_s;
  };
  if (!(e_total(c.h_lo) > 0.0) || !(e_total(c.h_hi) > 0.0)) {
    throw DegenerateEnergyError("total energy must be positive on the altitude interval");
  }

  return c;
}

}  // namespace aapopt
