#include "aapopt/mfp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "aapopt/errors.hpp"
#include "aapopt/model.hpp"

namespace aapopt {

double parametric_objective(const DerivedCoefficients& coeffs, const Vertex& v) {
  return rate_r1(coeffs, v.h) + v.t;
}

bool in_normal_set(const DerivedCoefficients& coeffs, const ScenarioParams& params,
                   const Vertex& v, double l) {
  if (v.h > coeffs.h_hi) return false;
  return v.t <= rate_r2(params, coeffs, coeffs.h_hi, l) - rate_r2(params, coeffs, v.h, l);
}

Vertex project_to_boundary(const DerivedCoefficients& coeffs, const ScenarioParams& params,
                           const Vertex& v, double l, double tol) {
  const Vertex a{coeffs.h_lo, 0.0};
  if (v.h <= a.h && v.t <= a.t) {
    throw DegenerateSegmentError("projection segment has no extent: query point does not "
                                 "dominate the box's lower corner");
  }
  if (in_normal_set(coeffs, params, v, l)) return v;

  // The lower corner is always in G and v is not, so bisection on the segment
  // parameter brackets the boundary crossing.
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const Vertex p{a.h + mid * (v.h - a.h), a.t + mid * (v.t - a.t)};
    if (in_normal_set(coeffs, params, p, l)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Vertex{a.h + lo * (v.h - a.h), a.t + lo * (v.t - a.t)};
}

namespace {

using ScoredVertex = PolyblockState::ScoredVertex;

// Max-heap order on the cached objective, with coordinates as deterministic
// tie-breakers so runs are bit-reproducible.
bool heap_less(const ScoredVertex& x, const ScoredVertex& y) {
  if (x.f != y.f) return x.f < y.f;
  if (x.v.h != y.v.h) return x.v.h < y.v.h;
  return x.v.t < y.v.t;
}

}  // namespace

PolyblockResult polyblock_solve(const DerivedCoefficients& coeffs, const ScenarioParams& params,
                                double l, const MfpSettings& settings,
                                std::optional<Vertex> incumbent_seed) {
  auto boundary_t = [&](double h) {
    return rate_r2(params, coeffs, coeffs.h_hi, l) - rate_r2(params, coeffs, h, l);
  };
  auto f = [&](const Vertex& v) { return parametric_objective(coeffs, v); };

  PolyblockState state;
  const double t_max = boundary_t(coeffs.h_lo);

  // The box's lower corner is always feasible and seeds the lower bound; the
  // caller may supply a better feasible starting incumbent.
  state.incumbent = Vertex{coeffs.h_lo, 0.0};
  state.f_min = f(state.incumbent);
  if (incumbent_seed && incumbent_seed->h >= coeffs.h_lo && incumbent_seed->h <= coeffs.h_hi &&
      incumbent_seed->t >= 0.0 && in_normal_set(coeffs, params, *incumbent_seed, l)) {
    const double f_seed = f(*incumbent_seed);
    if (f_seed > state.f_min) {
      state.f_min = f_seed;
      state.incumbent = *incumbent_seed;
    }
  }

  const Vertex top_corner{coeffs.h_hi, t_max};
  state.vertices.push_back({top_corner, f(top_corner)});

  PolyblockResult out;
  auto record = [&](double f_max) { out.trace.push_back({state.iteration, f_max, state.f_min}); };

  while (state.iteration < settings.max_inner) {
    ++state.iteration;

    // Lazy pruning: vertices that cannot beat the incumbent by more than e
    // are dead; drop them as they surface.
    while (!state.vertices.empty() && state.vertices.front().f <= state.f_min + settings.e) {
      std::pop_heap(state.vertices.begin(), state.vertices.end(), heap_less);
      state.vertices.pop_back();
    }
    if (state.vertices.empty()) {
      // Nothing can improve on the incumbent: the bounds have met.
      state.f_max = state.f_min;
      record(state.f_max);
      out.converged = true;
      break;
    }

    state.f_max = state.vertices.front().f;
    record(state.f_max);
    if ((state.f_max - state.f_min) / state.f_max <= settings.e) {
      out.converged = true;
      break;
    }

    std::pop_heap(state.vertices.begin(), state.vertices.end(), heap_less);
    const ScoredVertex top = state.vertices.back();
    state.vertices.pop_back();

    if (in_normal_set(coeffs, params, top.v, l)) {
      // Feasible vertex: its value is attainable, and every point it
      // dominates scores lower, so it is done improving — no split.
      if (top.f > state.f_min) {
        state.f_min = top.f;
        state.incumbent = top.v;
      }
      continue;
    }

    const Vertex z = project_to_boundary(coeffs, params, top.v, l, settings.bisection_tol);
    const double f_z = f(z);
    if (f_z > state.f_min) {
      state.f_min = f_z;
      state.incumbent = z;
    }

    // Two-dimensional vertex split: replace the selected vertex with the two
    // corners obtained by pulling one coordinate back to the projection.
    const Vertex children[2] = {{z.h, top.v.t}, {top.v.h, z.t}};
    for (const Vertex& child : children) {
      const double f_child = f(child);
      if (f_child > state.f_min + settings.e) {
        state.vertices.push_back({child, f_child});
        std::push_heap(state.vertices.begin(), state.vertices.end(), heap_less);
      }
    }
  }

  out.h_star = state.incumbent.h;
  out.value = sum_rate(coeffs, out.h_star) -
              l * energy(params, coeffs, out.h_star).e_total_j;
  return out;
}

MfpResult mfp_optimize(const ScenarioParams& params, const MfpSettings& settings) {
  if (!(settings.zeta > 0.0) || !(settings.e > 0.0) || !(settings.bisection_tol > 0.0) ||
      settings.max_outer < 1 || settings.max_inner < 1) {
    throw InvalidParamsError("mfp settings must all be positive");
  }
  const DerivedCoefficients coeffs = derive_coefficients(params);

  double h_k = 0.5 * (coeffs.h_lo + coeffs.h_hi);
  double l = gee(params, coeffs, h_k);

  MfpResult out;
  SolveResult& res = out.result;

  for (int k = 1; k <= settings.max_outer; ++k) {
    res.h_opt = h_k;
    res.iterations = k;

    // Seeding the incumbent with the current iterate's boundary point keeps
    // the ratio sequence nondecreasing even though the inner solve is only
    // e-approximate.
    const double t_k = rate_r2(params, coeffs, coeffs.h_hi, l) - rate_r2(params, coeffs, h_k, l);
    PolyblockResult pb = polyblock_solve(coeffs, params, l, settings, Vertex{h_k, t_k});
    res.trace.push_back({k, h_k, l, pb.h_star});
    out.inner_traces.push_back(std::move(pb.trace));

    if (!pb.converged) {
      res.termination = Termination::MaxIters;
      res.gee_opt = gee(params, coeffs, res.h_opt);
      return out;
    }

    const double l_next = gee(params, coeffs, pb.h_star);
    if ((l_next - l) / l_next < settings.zeta) {
      res.termination = Termination::Converged;
      res.gee_opt = gee(params, coeffs, res.h_opt);
      return out;
    }
    h_k = pb.h_star;
    l = l_next;
  }

  res.termination = Termination::MaxIters;
  res.gee_opt = gee(params, coeffs, res.h_opt);
  return out;
}

}  // namespace aapopt
