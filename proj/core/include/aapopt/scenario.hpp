#pragma once

namespace aapopt {

// Affine coefficients of the two altitude-dependent energy components:
// climb-and-descent energy  e_cl(h) = alpha_cl * h + beta_cl        [J]
// hover power               p_ho(h) = alpha_ho * h + beta_ho        [W]
// Slopes may be zero (rotor energy switched off for policy comparisons) but
// not negative; total energy must stay positive on the altitude interval,
// which derive_coefficients() checks.
struct EnergyConstants {
  double alpha_cl = 0.0;  // J per metre of climb altitude
  double beta_cl = 0.0;   // J offset of the climb energy
  double alpha_ho = 0.0;  // W per metre of hover altitude
  double beta_ho = 0.0;   // W offset of the hover power
};

// Full description of one deployment scenario. Field names match the JSON
// configuration schema one-to-one.
struct ScenarioParams {
  double h0 = 0.0;                // channel gain at 1 m reference distance (linear)
  double p_t_dbm = 0.0;           // total downlink transmit power [dBm]
  double p_h_w = 0.0;             // communication hardware power [W]
  double bandwidth_hz = 0.0;      // system bandwidth W [Hz]
  double noise_psd_dbm_hz = 0.0;  // noise power spectral density [dBm/Hz]
  double phi_deg = 0.0;           // antenna half-beamwidth angle [deg], 0 < phi < 90
  double rho_ue = 0.0;            // user density [UEs/m^2]
  double hover_time_s = 0.0;      // hover duration T [s]
  double r0_bps = 0.0;            // minimum per-UE rate R0 [bit/s]; 0 disables the constraint
  double h_min_m = 0.0;           // lowest allowed hover altitude [m], >= 1
  double h_max_m = 0.0;           // highest allowed hover altitude [m]
  EnergyConstants energy;
};

// Quantities derived once per scenario and shared by every solver:
//   sigma2_w    noise power over the whole band [W]
//   p_t_w       transmit power [W]
//   beta        edge-SNR numerator: edge_snr(h) = beta / h^4
//   c_rate      sum-rate scale: sum_rate(h) = c_rate * h^2 * log2(1 + beta/h^4)
//   h_cap_rate  largest altitude meeting the per-UE rate requirement
//               (infinity when r0_bps == 0)
//   h_lo, h_hi  the feasible altitude interval [h_min, min(h_max, h_cap_rate)]
struct DerivedCoefficients {
  double sigma2_w = 0.0;
  double p_t_w = 0.0;
  double beta = 0.0;
  double c_rate = 0.0;
  double h_cap_rate = 0.0;
  double h_lo = 0.0;
  double h_hi = 0.0;
};

// dBm -> W conversion used for both transmit power and noise PSD.
double dbm_to_watts(double dbm);

// Validates `params` (throws InvalidParamsError naming the offending field)
// and computes the derived coefficients. Throws InfeasibleError when the rate
// requirement caps the altitude below h_min_m, and DegenerateEnergyError when
// total energy is not strictly positive across [h_lo, h_hi].
DerivedCoefficients derive_coefficients(const ScenarioParams& params);

// Validation alone, for configuration checking; throws InvalidParamsError
// with a message that names the violated field.
void validate_params(const ScenarioParams& params);

}  // namespace aapopt
