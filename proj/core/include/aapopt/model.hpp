#pragma once

#include "aapopt/scenario.hpp"

namespace aapopt {

// Line-of-sight channel gain at ground distance r from the point under an
// access point hovering at h_a: h0 / (r^2 + h_a^2).
double los_gain(double r_m, double h_a_m, double h0);

// Coverage disc served from altitude h_a: radius r_bar = h_a * cot(phi) and
// the (real-valued, not rounded) number of users rho_ue * pi * r_bar^2.
struct Coverage {
  double r_bar_m = 0.0;
  double n_users = 0.0;
};
Coverage coverage(const ScenarioParams& params, double h_a_m);

// SNR of the cell-edge user in simplified form beta / h^4. Equals the
// unsimplified link-budget expression p_t * h0 / (N * (r_bar^2 + h^2) * sigma^2).
double edge_snr(const DerivedCoefficients& coeffs, double h_a_m);

// Sum of the edge-rate lower bound over all covered users, normalized by
// bandwidth: c_rate * h^2 * log2(1 + beta/h^4)  [bits/Hz].
double sum_rate(const DerivedCoefficients& coeffs, double h_a_m);

// d(sum_rate)/dh = c_rate * [2h*log2(1+beta/h^4) - 4*beta*h/(ln2*(beta+h^4))].
double sum_rate_derivative(const DerivedCoefficients& coeffs, double h_a_m);

// Mission energy split: climb/descent, hover, and communication components.
// e_cl = alpha_cl*h + beta_cl; e_ho = (alpha_ho*h + beta_ho)*T;
// e_c = (p_t_w + p_h_w)*T; e_total is their sum, affine and (for positive
// slopes) strictly increasing in h.
struct EnergyBreakdown {
  double e_cl_j = 0.0;
  double e_ho_j = 0.0;
  double e_c_j = 0.0;
  double e_total_j = 0.0;
};
EnergyBreakdown energy(const ScenarioParams& params, const DerivedCoefficients& coeffs,
                       double h_a_m);

// Global energy efficiency sum_rate / e_total [bits/(J*Hz)]. Throws
// DegenerateEnergyError when total energy is not strictly positive.
double gee(const ScenarioParams& params, const DerivedCoefficients& coeffs, double h_a_m);

// Building blocks of the increasing-function decomposition of the parametric
// objective sum_rate(h) - l*e_total(h) = rate_r1(h) - rate_r2(h, l):
//   rate_r1(h)    = c_rate * h^2 * log2(beta + h^4)         (increasing)
//   rate_r2(h, l) = c_rate * h^2 * log2(h^4) + l*e_total(h) (increasing for h >= 1)
double rate_r1(const DerivedCoefficients& coeffs, double h_a_m);
double rate_r2(const ScenarioParams& params, const DerivedCoefficients& coeffs, double h_a_m,
               double l);

struct RateDecomposition {
  double r1 = 0.0;
  double r2 = 0.0;
};

// Both decomposition terms at once. Throws DomainError for h_a < 1, where the
// log2(h^4) term stops being nondecreasing and the decomposition loses the
// monotonicity the polyblock solver depends on.
RateDecomposition monotone_decomposition(const DerivedCoefficients& coeffs,
                                         const ScenarioParams& params, double h_a_m, double l);

}  // namespace aapopt
