#include "aapopt/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "aapopt/errors.hpp"
#include "aapopt/model.hpp"

namespace aapopt {

OracleResult grid_argmax(const ScenarioParams& params, int n_points) {
  if (n_points < 3) throw InvalidParamsError("grid_argmax needs n_points >= 3");
  const DerivedCoefficients coeffs = derive_coefficients(params);

  OracleResult out;
  out.grid_points = n_points;

  if (coeffs.h_hi == coeffs.h_lo) {
    out.h_star = coeffs.h_lo;
    out.gee_star = gee(params, coeffs, out.h_star);
    return out;
  }

  // Dense scan; strict improvement keeps the first (lowest-altitude) index on
  // ties.
  const double span = coeffs.h_hi - coeffs.h_lo;
  int best = 0;
  double best_gee = -1.0;
  for (int i = 0; i < n_points; ++i) {
    const double h = coeffs.h_lo + span * static_cast<double>(i) / (n_points - 1);
    const double g = gee(params, coeffs, h);
    if (g > best_gee) {
      best_gee = g;
      best = i;
    }
  }
  const double grid_h = coeffs.h_lo + span * static_cast<double>(best) / (n_points - 1);

  // Golden-section refinement on the bracket around the best grid point.
  // Assumes the curve is locally unimodal there; the final comparison against
  // the raw grid maximum guarantees refinement never worsens the answer.
  double a = coeffs.h_lo + span * static_cast<double>(std::max(best - 1, 0)) / (n_points - 1);
  double b = coeffs.h_lo +
             span * static_cast<double>(std::min(best + 1, n_points - 1)) / (n_points - 1);
  constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5)-1)/2
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double g1 = gee(params, coeffs, x1);
  double g2 = gee(params, coeffs, x2);
  while (b - a > 1e-4) {
    if (g1 >= g2) {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - kInvPhi * (b - a);
      g1 = gee(params, coeffs, x1);
    } else {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + kInvPhi * (b - a);
      g2 = gee(params, coeffs, x2);
    }
  }
  const double refined_h = g1 >= g2 ? x1 : x2;
  const double refined_gee = std::max(g1, g2);

  if (refined_gee >= best_gee) {
    out.h_star = refined_h;
    out.gee_star = refined_gee;
    out.refined = true;
  } else {
    out.h_star = grid_h;
    out.gee_star = best_gee;
    out.refined = false;
  }
  return out;
}

std::vector<CurveRow> gee_curve(const ScenarioParams& params, int n_points) {
  if (n_points < 2) throw InvalidParamsError("gee_curve needs n_points >= 2");
  // The full plotting curve ignores the rate cap, so derive coefficients as
  // if the constraint were off; everything except h_cap/h_hi is identical.
  ScenarioParams uncapped = params;
  uncapped.r0_bps = 0.0;
  const DerivedCoefficients coeffs = derive_coefficients(uncapped);

  std::vector<CurveRow> rows;
  rows.reserve(n_points);
  const double span = params.h_max_m - params.h_min_m;
  for (int i = 0; i < n_points; ++i) {
    const double h = params.h_min_m + span * static_cast<double>(i) / (n_points - 1);
    CurveRow row;
    row.h_m = h;
    row.sum_rate_bits_per_hz = sum_rate(coeffs, h);
    row.energy_j = energy(params, coeffs, h).e_total_j;
    row.gee = row.sum_rate_bits_per_hz / row.energy_j;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace aapopt
