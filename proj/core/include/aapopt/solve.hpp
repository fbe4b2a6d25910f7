#pragma once

#include <string>
#include <vector>

namespace aapopt {

enum class Termination {
  Converged,
  MaxIters,
  Infeasible,
};

std::string to_string(Termination t);

// One outer (Dinkelbach) iteration: the iterate h_k entering the iteration,
// the ratio parameter l_k used for the subproblem, and the subproblem's
// maximizer.
struct IterationRecord {
  int k = 0;
  double h_k = 0.0;
  double l_k = 0.0;
  double subproblem_h = 0.0;
};

struct SolveResult {
  double h_opt = 0.0;    // m
  double gee_opt = 0.0;  // bits/(J*Hz), recomputed at h_opt
  int iterations = 0;
  std::vector<IterationRecord> trace;
  Termination termination = Termination::Converged;
};

}  // namespace aapopt
