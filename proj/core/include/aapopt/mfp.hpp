#pragma once

#include <optional>
#include <vector>

#include "aapopt/scenario.hpp"
#include "aapopt/solve.hpp"

namespace aapopt {

// A corner of the polyblock in the lifted (altitude, auxiliary-rate) plane.
struct Vertex {
  double h = 0.0;  // m
  double t = 0.0;  // bits/Hz
};

struct MfpSettings {
  double zeta = 1e-6;          // outer Dinkelbach relative tolerance
  double e = 1e-4;             // inner polyblock relative bound-gap tolerance
  int max_outer = 50;
  int max_inner = 50000;
  double bisection_tol = 1e-6;  // boundary projection, normalized segment units
};

// Upper/lower bound pair recorded at one polyblock iteration.
struct BoundsRecord {
  int iteration = 0;
  double f_max = 0.0;
  double f_min = 0.0;
};

// Live state of one polyblock run. `vertices` holds the not-yet-pruned
// polyblock corners (managed as a max-heap on cached objective values by
// polyblock_solve); the incumbent is the best feasible point found and f_min
// its objective value, which is the algorithm's lower bound.
struct PolyblockState {
  struct ScoredVertex {
    Vertex v;
    double f = 0.0;
  };
  std::vector<ScoredVertex> vertices;
  double f_max = 0.0;
  double f_min = 0.0;
  Vertex incumbent;
  int iteration = 0;
};

struct PolyblockResult {
  double h_star = 0.0;   // incumbent altitude
  double value = 0.0;    // sum_rate(h_star) - l*e_total(h_star)
  std::vector<BoundsRecord> trace;
  bool converged = false;
};

// Objective of the lifted parametric problem: f(v) = rate_r1(v.h) + v.t,
// strictly increasing in both coordinates.
double parametric_objective(const DerivedCoefficients& coeffs, const Vertex& v);

// Membership in the normal (downward-closed) set
//   G = { v : v.h <= h_hi,  v.t <= rate_r2(h_hi, l) - rate_r2(v.h, l) }.
bool in_normal_set(const DerivedCoefficients& coeffs, const ScenarioParams& params,
                   const Vertex& v, double l);

// Intersection of the segment from the box's lower corner a = (h_min, 0)
// toward v with the boundary of G, located by bisection on the segment
// parameter until the bracket is narrower than tol. Returns v unchanged when
// v is already in G; throws DegenerateSegmentError when v <= a componentwise.
Vertex project_to_boundary(const DerivedCoefficients& coeffs, const ScenarioParams& params,
                           const Vertex& v, double l, double tol);

// Polyblock outer approximation for the parametric subproblem at fixed l:
// maximize f over G intersected with the box. Starts from the box's upper
// corner, repeatedly projects the best vertex onto the boundary of G, splits
// it into its two 2-D children, prunes vertices that cannot beat the
// incumbent by more than e, and stops when the relative bound gap closes to
// e. An optional feasible seed primes the incumbent (the outer loop passes
// its current iterate, which keeps the Dinkelbach ratio nondecreasing).
PolyblockResult polyblock_solve(const DerivedCoefficients& coeffs, const ScenarioParams& params,
                                double l, const MfpSettings& settings,
                                std::optional<Vertex> incumbent_seed = std::nullopt);

struct MfpResult {
  SolveResult result;
  // Bound traces of every inner polyblock run, in outer-iteration order; the
  // last entry belongs to the final outer iteration.
  std::vector<std::vector<BoundsRecord>> inner_traces;
};

// Outer Dinkelbach loop over the polyblock subproblem. Reports the iterate
// that entered the final outer iteration, like scp_optimize.
MfpResult mfp_optimize(const ScenarioParams& params, const MfpSettings& settings = {});

}  // namespace aapopt
