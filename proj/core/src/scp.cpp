#include "aapopt/scp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aapopt/errors.hpp"
#include "aapopt/model.hpp"

namespace aapopt {

double linearized_rate(const DerivedCoefficients& coeffs, double h_m, double h_k_m) {
  return sum_rate(coeffs, h_k_m) + sum_rate_derivative(coeffs, h_k_m) * (h_m - h_k_m);
}

std::pair<double, double> linearized_feasible_interval(const DerivedCoefficients& coeffs,
                                                       const ScenarioParams& params,
                                                       double h_k_m) {
  double hi = params.h_max_m;
  if (params.r0_bps > 0.0) {
    // Per-UE edge rate linearized at h_k:
    //   W*log2(1+beta/h_k^4) - 4*W*beta*(h-h_k) / (h_k*(beta+h_k^4)*ln2) >= r0.
    // The slope is strictly negative, so the constraint is h <= h_bound.
    const double h4 = h_k_m * h_k_m * h_k_m * h_k_m;
    const double rate_k = params.bandwidth_hz * std::log2(1.0 + coeffs.beta / h4);
    const double slope_mag = 4.0 * params.bandwidth_hz * coeffs.beta /
                             (h_k_m * (coeffs.beta + h4) * std::numbers::ln2);
    const double h_bound = h_k_m + (rate_k - params.r0_bps) / slope_mag;
    hi = std::min(hi, h_bound);
  }
  if (hi < params.h_min_m) {
    throw InfeasibleError("linearized rate constraint leaves no feasible altitude at h_k = " +
                          std::to_string(h_k_m));
  }
  return {params.h_min_m, hi};
}

double scp_subproblem(const DerivedCoefficients& coeffs, const ScenarioParams& params,
                      double h_k_m, double l) {
  const auto [lo, hi] = linearized_feasible_interval(coeffs, params, h_k_m);
  // Affine objective: slope decides the maximizing endpoint; an exact tie
  // goes to the lower altitude (lower energy).
  const double energy_slope = params.energy.alpha_cl + params.energy.alpha_ho * params.hover_time_s;
  const double slope = sum_rate_derivative(coeffs, h_k_m) - l * energy_slope;
  return slope > 0.0 ? hi : lo;
}

namespace {

// d(rate_r1)/dh = c*[2h*log2(beta+h^4) + 4h^5/(ln2*(beta+h^4))].
double rate_r1_derivative(const DerivedCoefficients& coeffs, double h) {
  const double h4 = h * h * h * h;
  return coeffs.c_rate * (2.0 * h * std::log2(coeffs.beta + h4) +
                          4.0 * h4 * h / (std::numbers::ln2 * (coeffs.beta + h4)));
}

// rate_r2 without its energy part: c*h^2*log2(h^4).
double rate_r2_log(const DerivedCoefficients& coeffs, double h) {
  const double h2 = h * h;
  return coeffs.c_rate * h2 * std::log2(h2 * h2);
}

// Maximizer over [lo, hi] of the concave minorant
//   Q(h) = rate_r1(h_k) + rate_r1'(h_k)*(h - h_k) - rate_r2_log(h) - l*e_total(h).
// Q'(h) = 0 reduces to the monotone scalar equation h*(2*ln h + 1) = K with
//   K = (rate_r1'(h_k) - l*energy_slope) * ln2 / (4*c_rate),
// solved by Newton from the upper end (g is convex and increasing for h >= 1,
// so the iteration descends monotonically onto the root).
double concave_step(const DerivedCoefficients& coeffs, double energy_slope, double h_k,
                    double l, double lo, double hi) {
  const double K = (rate_r1_derivative(coeffs, h_k) - l * energy_slope) * std::numbers::ln2 /
                   (4.0 * coeffs.c_rate);
  auto g = [](double h) { return h * (2.0 * std::log(h) + 1.0); };
  if (K <= g(lo)) return lo;
  if (K >= g(hi)) return hi;
  double h = hi;
  for (int i = 0; i < 100; ++i) {
    const double step = (g(h) - K) / (2.0 * std::log(h) + 3.0);
    h -= step;
    if (std::abs(step) < 1e-15 * hi) break;
  }
  return std::clamp(h, lo, hi);
}

}  // namespace

SolveResult scp_optimize(const ScenarioParams& params, const ScpSettings& settings) {
  if (!(settings.zeta > 0.0)) throw InvalidParamsError("scp zeta must be > 0");
  if (settings.max_iters < 1) throw InvalidParamsError("scp max_iters must be >= 1");
  const DerivedCoefficients coeffs = derive_coefficients(params);

  double h_k = settings.h_init.value_or(0.5 * (coeffs.h_lo + coeffs.h_hi));
  if (h_k < coeffs.h_lo || h_k > coeffs.h_hi) {
    throw InvalidParamsError("scp h_init outside the feasible altitude interval");
  }

  const double energy_slope = params.energy.alpha_cl + params.energy.alpha_ho * params.hover_time_s;
  auto e_total = [&](double h) { return energy(params, coeffs, h).e_total_j; };

  SolveResult result;
  double l = gee(params, coeffs, h_k);
  // Last four subproblem outputs and ratios, for the endpoint-cycle guard.
  double recent_h[4] = {h_k, h_k, h_k, h_k};
  double recent_l[4] = {l, l, l, l};

  for (int k = 1; k <= settings.max_iters; ++k) {
    result.h_opt = h_k;
    result.iterations = k;

    const auto [lo, hi] = linearized_feasible_interval(coeffs, params, h_k);
    const double h_star = concave_step(coeffs, energy_slope, h_k, l, lo, hi);
    result.trace.push_back({k, h_k, l, h_star});

    // Ratio update with the surrogate's rate part; the minorant touches the
    // true rate at h_k, which keeps this sequence nondecreasing.
    const double surrogate_rate = rate_r1(coeffs, h_k) +
                                  rate_r1_derivative(coeffs, h_k) * (h_star - h_k) -
                                  rate_r2_log(coeffs, h_star);
    const double l_next = surrogate_rate / e_total(h_star);

    if ((l_next - l) / l_next < settings.zeta) {
      result.termination = Termination::Converged;
      result.gee_opt = gee(params, coeffs, result.h_opt);
      return result;
    }

    // Endpoint-cycle guard: the iterate alternating between the same two
    // altitudes for four iterations without the ratio moving means the
    // surrogate keeps flipping between interval ends; settle on the better.
    if (k >= 4 && h_star == recent_h[1] && recent_h[0] == recent_h[2] &&
        h_star != recent_h[0] && (l_next - recent_l[3]) / l_next < settings.zeta) {
      const double a = h_star;
      const double b = recent_h[0];
      result.h_opt = gee(params, coeffs, a) >= gee(params, coeffs, b) ? a : b;
      result.termination = Termination::Converged;
      result.gee_opt = gee(params, coeffs, result.h_opt);
      return result;
    }
    recent_h[3] = recent_h[2];
    recent_h[2] = recent_h[1];
    recent_h[1] = recent_h[0];
    recent_h[0] = h_star;
    recent_l[3] = recent_l[2];
    recent_l[2] = recent_l[1];
    recent_l[1] = recent_l[0];
    recent_l[0] = l_next;

    h_k = h_star;
    l = l_next;
  }

  result.termination = Termination::MaxIters;
  result.gee_opt = gee(params, coeffs, result.h_opt);
  return result;
}

}  // namespace aapopt
