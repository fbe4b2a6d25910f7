#include "aapopt/model.hpp"

#include <cmath>
#include <numbers>

#include "aapopt/errors.hpp"

namespace aapopt {

double los_gain(double r_m, double h_a_m, double h0) {
  return h0 / (r_m * r_m + h_a_m * h_a_m);
}

Coverage coverage(const ScenarioParams& params, double h_a_m) {
  const double phi = params.phi_deg * std::numbers::pi / 180.0;
  Coverage c;
  c.r_bar_m = h_a_m / std::tan(phi);
  c.n_users = params.rho_ue * std::numbers::pi * c.r_bar_m * c.r_bar_m;
  return c;
}

double edge_snr(const DerivedCoefficients& coeffs, double h_a_m) {
  const double h2 = h_a_m * h_a_m;
  return coeffs.beta / (h2 * h2);
}

double sum_rate(const DerivedCoefficients& coeffs, double h_a_m) {
  const double h2 = h_a_m * h_a_m;
  return coeffs.c_rate * h2 * std::log2(1.0 + coeffs.beta / (h2 * h2));
}

double sum_rate_derivative(const DerivedCoefficients& coeffs, double h_a_m) {
  const double h = h_a_m;
  const double h4 = h * h * h * h;
  return coeffs.c_rate * (2.0 * h * std::log2(1.0 + coeffs.beta / h4) -
                          4.0 * coeffs.beta * h / (std::numbers::ln2 * (coeffs.beta + h4)));
}

EnergyBreakdown energy(const ScenarioParams& params, const DerivedCoefficients& coeffs,
                       double h_a_m) {
  const EnergyConstants& e = params.energy;
  EnergyBreakdown b;
  b.e_cl_j = e.alpha_cl * h_a_m + e.beta_cl;
  b.e_ho_j = (e.alpha_ho * h_a_m + e.beta_ho) * params.hover_time_s;
  b.e_c_j = (coeffs.p_t_w + params.p_h_w) * params.hover_time_s;
  b.e_total_j = b.e_cl_j + b.e_ho_j + b.e_c_j;
  return b;
}

double gee(const ScenarioParams& params, const DerivedCoefficients& coeffs, double h_a_m) {
  const double e_total = energy(params, coeffs, h_a_m).e_total_j;
  if (!(e_total > 0.0)) {
    throw DegenerateEnergyError("total energy nonpositive at h = " + std::to_string(h_a_m));
  }
  return sum_rate(coeffs, h_a_m) / e_total;
}

double rate_r1(const DerivedCoefficients& coeffs, double h_a_m) {
  const double h2 = h_a_m * h_a_m;
  return coeffs.c_rate * h2 * std::log2(coeffs.beta + h2 * h2);
}

double rate_r2(const ScenarioParams& params, const DerivedCoefficients& coeffs, double h_a_m,
               double l) {
  const double h2 = h_a_m * h_a_m;
  return coeffs.c_rate * h2 * std::log2(h2 * h2) +
         l * energy(params, coeffs, h_a_m).e_total_j;
}

RateDecomposition monotone_decomposition(const DerivedCoefficients& coeffs,
                                         const ScenarioParams& params, double h_a_m, double l) {
  if (h_a_m < 1.0) {
    throw DomainError("monotone decomposition requires h >= 1 m (log2(h^4) term decreasing "
                      "below 1)");
  }
  return RateDecomposition{rate_r1(coeffs, h_a_m), rate_r2(params, coeffs, h_a_m, l)};
}

}  // namespace aapopt
