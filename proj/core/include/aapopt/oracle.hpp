#pragma once

#include <vector>

#include "aapopt/scenario.hpp"

namespace aapopt {

struct OracleResult {
  double h_star = 0.0;    // m
  double gee_star = 0.0;  // bits/(J*Hz)
  int grid_points = 0;
  bool refined = false;
};

// Brute-force reference: evaluates GEE on a uniform n_points grid over
// [h_lo, h_hi] (ties broken toward the first, i.e. lowest, grid index), then
// refines the bracketing interval around the best point by golden-section
// search down to a 1e-4 m bracket. Golden section assumes local unimodality;
// if the refined point is no better than the raw grid maximum, the grid point
// is kept, so refinement never worsens the answer. Deterministic and
// independent of both solvers' calculus.
OracleResult grid_argmax(const ScenarioParams& params, int n_points);

// One sample of the efficiency curve, internally consistent by construction
// (gee == sum_rate / e_total).
struct CurveRow {
  double h_m = 0.0;
  double gee = 0.0;
  double sum_rate_bits_per_hz = 0.0;
  double energy_j = 0.0;
};

// Uniformly spaced samples of (GEE, sum rate, energy) over [h_min_m, h_max_m],
// ignoring the rate cap — the full curve for plotting.
std::vector<CurveRow> gee_curve(const ScenarioParams& params, int n_points);

}  // namespace aapopt
