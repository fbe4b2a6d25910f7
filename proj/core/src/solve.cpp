#include "aapopt/solve.hpp"

namespace aapopt {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::Converged:
      return "converged";
    case Termination::MaxIters:
      return "max_iters";
    case Termination::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

}  // namespace aapopt
