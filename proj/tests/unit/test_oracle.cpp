#include <algorithm>
#include <cmath>
#include <vector>

#include "aapopt/errors.hpp"
#include "aapopt/model.hpp"
#include "aapopt/oracle.hpp"
#include "aapopt/scenario.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace aapopt;
namespace ts = testsupport;
namespace fz = testsupport::frozen;

namespace {

const ScenarioParams kBase = ts::baseline();
const DerivedCoefficients kCoeffs = derive_coefficients(kBase);

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("grid search finds the interior optimum") {
  const OracleResult r = grid_argmax(kBase, 10000);
  CHECK(std::fabs(r.h_star - fz::kHOpt) <= 1e-3);
  CHECK(ts::rel_close(r.gee_star, fz::kGeeOpt, 1e-10));
  CHECK(r.h_star >= kCoeffs.h_lo);
  CHECK(r.h_star <= kCoeffs.h_hi);
  CHECK(r.grid_points == 10000);
  CHECK(ts::rel_close(r.gee_star, gee(kBase, kCoeffs, r.h_star), 1e-12));
}

TEST_CASE("two grid resolutions agree after refinement") {
  const OracleResult coarse = grid_argmax(kBase, 10000);
  const OracleResult fine = grid_argmax(kBase, 100000);
  CHECK(std::fabs(coarse.h_star - fine.h_star) <= 1e-3);
}

TEST_CASE("refinement never loses to the raw grid") {
  const int n = 101;
  const OracleResult r = grid_argmax(kBase, n);
  double grid_best = 0.0;
  for (int i = 0; i < n; ++i) {
    const double h = kCoeffs.h_lo + (kCoeffs.h_hi - kCoeffs.h_lo) * i / (n - 1.0);
    grid_best = std::max(grid_best, gee(kBase, kCoeffs, h));
  }
  CHECK(r.gee_star >= grid_best);
}

TEST_CASE("argmax is invariant under positive scaling of the rate numerator") {
  ScenarioParams scaled = kBase;
  scaled.rho_ue *= 2.0;
  scaled.h0 *= 2.0;  // exactly doubles the numerator while fixing the link budget
  const OracleResult a = grid_argmax(kBase, 5000);
  const OracleResult b = grid_argmax(scaled, 5000);
  CHECK(a.h_star == b.h_star);
  CHECK(ts::rel_close(b.gee_star, 2.0 * a.gee_star, 1e-12));
}

TEST_CASE("monotone curves pin the optimum at an interval end") {
  // Past the interior peak the curve falls, so the argmax is the lower end...
  ScenarioParams falling = kBase;
  falling.h_min_m = 100.0;
  const OracleResult lo_end = grid_argmax(falling, 1000);
  CHECK(std::fabs(lo_end.h_star - 100.0) <= 1e-3);

  // ...and before it the curve rises, putting the argmax at the upper end.
  ScenarioParams rising = kBase;
  rising.h_max_m = 40.0;
  const OracleResult hi_end = grid_argmax(rising, 1000);
  CHECK(std::fabs(hi_end.h_star - 40.0) <= 1e-3);
}

TEST_CASE("the minimal grid still answers") {
  const OracleResult r = grid_argmax(kBase, 3);
  CHECK(r.h_star >= kCoeffs.h_lo);
  CHECK(r.h_star <= kCoeffs.h_hi);
  CHECK(ts::rel_close(r.gee_star, gee(kBase, kCoeffs, r.h_star), 1e-12));
}

TEST_CASE("undersized grids are rejected") {
  CHECK_THROWS_AS((void)grid_argmax(kBase, 2), InvalidParamsError);
  CHECK_THROWS_AS((void)grid_argmax(kBase, 0), InvalidParamsError);
}

TEST_CASE("infeasible scenarios are rejected") {
  ScenarioParams p = kBase;
  p.r0_bps = 3e8;
  CHECK_THROWS_AS((void)grid_argmax(p, 100), InfeasibleError);
}

TEST_CASE("efficiency curve rows are internally consistent") {
  const std::vector<CurveRow> curve = gee_curve(kBase, 500);
  REQUIRE(curve.size() == 500);
  CHECK(curve.front().h_m == kBase.h_min_m);
  CHECK(curve.back().h_m == kBase.h_max_m);
  double prev_h = 0.0;
  for (const CurveRow& row : curve) {
    CHECK(row.h_m > prev_h);
    CHECK(ts::rel_close(row.gee * row.energy_j, row.sum_rate_bits_per_hz, 1e-12));
    prev_h = row.h_m;
  }
}

TEST_CASE("efficiency curve droops toward both ends") {
  const std::vector<CurveRow> curve = gee_curve(kBase, 2001);
  double best = 0.0;
  for (const CurveRow& row : curve) best = std::max(best, row.gee);
  CHECK(curve.front().gee < 0.9 * best);
  CHECK(curve.back().gee < 0.9 * best);
}

TEST_CASE("the curve spans the full altitude range regardless of the rate cap") {
  ScenarioParams p = kBase;
  p.r0_bps = 3e8;  // infeasible for the solvers, irrelevant for the plot
  const std::vector<CurveRow> curve = gee_curve(p, 100);
  REQUIRE(curve.size() == 100);
  CHECK(curve.back().h_m == p.h_max_m);
}

TEST_CASE("removing rotor energy moves the curve peak upward") {
  const std::vector<CurveRow> full = gee_curve(kBase, 1000);
  const std::vector<CurveRow> no_rotor = gee_curve(ts::zero_rotor_baseline(), 1000);
  auto argmax_h = [](const std::vector<CurveRow>& curve) {
    double best = -1.0;
    double at = 0.0;
    for (const CurveRow& row : curve) {
      if (row.gee > best) {
        best = row.gee;
        at = row.h_m;
      }
    }
    return at;
  };
  CHECK(argmax_h(no_rotor) > argmax_h(full));
}

TEST_CASE("curves need at least two samples") {
  CHECK_THROWS_AS((void)gee_curve(kBase, 1), InvalidParamsError);
}

}  // TEST_SUITE
