#pragma once

#include <optional>
#include <utility>

#include "aapopt/scenario.hpp"
#include "aapopt/solve.hpp"

namespace aapopt {

struct ScpSettings {
  // Relative improvement threshold on the Dinkelbach ratio. The iterates
  // contract linearly while the ratio improves quadratically in the remaining
  // altitude error, so the default is deliberately near the double-precision
  // floor; looser values stop visibly short of the stationary point.
  double zeta = 1e-15;
  int max_iters = 500;
  // Starting altitude; defaults to the midpoint of [h_lo, h_hi].
  std::optional<double> h_init;
};

// First-order Taylor expansion of sum_rate around h_k, evaluated at h.
double linearized_rate(const DerivedCoefficients& coeffs, double h_m, double h_k_m);

// Altitudes satisfying the Taylor-linearized per-UE rate constraint around
// h_k, intersected with [h_min_m, h_max_m]. The linearized constraint is
// affine with negative slope, so the set is [h_min_m, min(h_max_m, h_bound)].
// Throws InfeasibleError when empty.
std::pair<double, double> linearized_feasible_interval(const DerivedCoefficients& coeffs,
                                                       const ScenarioParams& params,
                                                       double h_k_m);

// Exact maximizer of the fully linearized surrogate
// linearized_rate(h, h_k) - l*e_total(h) over the linearized feasible
// interval. The objective is affine in h, so the maximizer is the endpoint
// with the larger value; a zero slope ties toward the lower endpoint (lower
// energy).
double scp_subproblem(const DerivedCoefficients& coeffs, const ScenarioParams& params,
                      double h_k_m, double l);

// Dinkelbach loop over successive convex surrogates. Each inner step
// maximizes a concave minorant of sum_rate(h) - l*e_total(h): the convex term
// rate_r1 is linearized at h_k while the concave remainder -rate_r2 and the
// energy term stay exact. The minorant touches the true objective at h_k,
// which makes the ratio sequence l_k nondecreasing. Stops when the relative
// ratio improvement drops below zeta (or on a detected endpoint cycle);
// reports the iterate that entered the final iteration.
SolveResult scp_optimize(const ScenarioParams& params, const ScpSettings& settings = {});

}  // namespace aapopt
