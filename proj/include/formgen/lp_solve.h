#ifndef FORMGEN_LP_SOLVE_H_
#define FORMGEN_LP_SOLVE_H_

#include <string_view>
#include <vector>

#include "formgen/canonical.h"

namespace formgen {

inline constexpr double kDefaultFeasibilityTolerance = 1e-7;

// minimize objective·x  subject to  constraints·x <= limits,  x >= 0.
struct DenseLp {
  std::vector<double> objective;
  std::vector<std::vector<double>> constraints;
  std::vector<double> limits;
};

DenseLp ToDenseLp(const CanonicalFormulation& formulation);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;        // Optimal only
  double objective_value = 0;   // Optimal only
};

// Dense two-phase primal simplex with Bland's rule; meant for problems of a
// few dozen rows and columns. Optimal solutions are basic (vertices) and
// satisfy constraints·x <= limits + eps, x >= 0. Throws StructureError when
// the dimensions of objective, constraints and limits disagree.
LpSolution SolveLp(const DenseLp& lp, double eps = kDefaultFeasibilityTolerance);
LpSolution SolveLp(const CanonicalFormulation& formulation,
                   double eps = kDefaultFeasibilityTolerance);

}  // namespace formgen

#endif  // FORMGEN_LP_SOLVE_H_
