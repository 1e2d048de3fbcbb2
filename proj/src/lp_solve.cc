#include "formgen/lp_solve.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "formgen/error.h"

namespace formgen {
namespace {

constexpr long kMaxPivots = 1'000'000;

// Tableau in equality form. Columns: structural, slack, artificial; the last
// column holds the right-hand side. `cost` is the reduced-cost row with the
// negated objective value in its last entry.
class Tableau {
 public:
  Tableau(const DenseLp& lp, double eps) : eps_(eps) {
    n_ = lp.objective.size();
    m_ = lp.limits.size();
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.limits[i] < 0) artificial_rows_.push_back(i);
    }
    width_ = n_ + m_ + artificial_rows_.size() + 1;
    rows_.assign(m_, std::vector<double>(width_, 0.0));
    basis_.assign(m_, 0);
    std::size_t next_artificial = n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = lp.limits[i] < 0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) {
        rows_[i][j] = sign * lp.constraints[i][j];
      }
      rows_[i][n_ + i] = sign;
      rows_[i][width_ - 1] = sign * lp.limits[i];
      if (sign < 0) {
        rows_[i][next_artificial] = 1.0;
        basis_[i] = next_artificial++;
      } else {
        basis_[i] = n_ + i;
      }
    }
  }

  // Phase 1; false if the system is infeasible.
  bool FindFeasibleBasis() {
    if (artificial_rows_.empty()) return true;
    std::vector<double> cost(width_, 0.0);
    for (std::size_t j = n_ + m_; j < width_ - 1; ++j) cost[j] = 1.0;
    SetCost(cost);
    allowed_columns_ = width_ - 1;
    if (Optimize() != LpStatus::kOptimal) return false;  // cannot happen
    if (-cost_[width_ - 1] > eps_ * Scale()) return false;
    DriveOutArtificials();
    return true;
  }

  LpStatus Minimize(const std::vector<double>& objective) {
    std::vector<double> cost(width_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) cost[j] = objective[j];
    SetCost(cost);
    allowed_columns_ = n_ + m_;
    return Optimize();
  }

  std::vector<double> Solution() const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_ - 1];
    }
    return x;
  }

 private:
  double Scale() const {
    double scale = 1.0;
    for (const auto& row : rows_) {
      scale = std::max(scale, std::abs(row[width_ - 1]));
    }
    return scale;
  }

  void SetCost(const std::vector<double>& cost) {
    cost_ = cost;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const double multiplier = cost_[basis_[i]];
      if (multiplier == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        cost_[j] -= multiplier * rows_[i][j];
      }
    }
  }

  void Pivot(std::size_t row, std::size_t column) {
    std::vector<double>& pivot_row = rows_[row];
    const double pivot = pivot_row[column];
    for (double& value : pivot_row) value /= pivot;
    pivot_row[column] = 1.0;
    const auto eliminate = [&](std::vector<double>& target) {
      const double factor = target[column];
      if (factor == 0.0) return;
      for (std::size_t j = 0; j < width_; ++j) {
        target[j] -= factor * pivot_row[j];
      }
      target[column] = 0.0;
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != row) eliminate(rows_[i]);
    }
    eliminate(cost_);
    basis_[row] = column;
  }

  // Bland's rule: lowest-index improving column, then the lowest-index basic
  // variable among the ratio-test ties.
  LpStatus Optimize() {
    for (long pivots = 0; pivots < kMaxPivots; ++pivots) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed_columns_; ++j) {
        if (cost_[j] < -eps_) {
          entering = j;
          break;
        }
      }
      if (!entering) return LpStatus::kOptimal;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const double entry = rows_[i][*entering];
        if (entry > eps_) {
          best_ratio = std::min(best_ratio, rows_[i][width_ - 1] / entry);
        }
      }
      std::optional<std::size_t> leaving;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const double entry = rows_[i][*entering];
        if (entry <= eps_) continue;
        if (rows_[i][width_ - 1] / entry > best_ratio + eps_) continue;
        if (!leaving || basis_[i] < basis_[*leaving]) leaving = i;
      }
      if (!leaving) return LpStatus::kUnbounded;
      Pivot(*leaving, *entering);
    }
    throw Error("simplex pivot limit exceeded");
  }

  // After phase 1 every artificial still basic sits at zero; pivot it out on
  // any usable column, or drop its row as redundant.
  void DriveOutArtificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_ + m_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> column;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (std::abs(rows_[i][j]) > eps_) {
          column = j;
          break;
        }
      }
      if (column) {
        Pivot(i, *column);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
      }
    }
  }

  double eps_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t width_ = 0;
  std::size_t allowed_columns_ = 0;
  std::vector<std::size_t> artificial_rows_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<double> cost_;
};

void CheckDimensions(const DenseLp& lp) {
  const std::size_t n = lp.objective.size();
  if (lp.constraints.size() != lp.limits.size()) {
    throw StructureError("constraint matrix has " +
                         std::to_string(lp.constraints.size()) +
                         " rows but there are " +
                         std::to_string(lp.limits.size()) + " limits");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (lp.constraints[i].size() != n) {
      throw StructureError("constraint row " + std::to_string(i) + " has " +
                           std::to_string(lp.constraints[i].size()) +
                           " entries, expected " + std::to_string(n));
    }
  }
  const auto finite = [](double v) { return std::isfinite(v); };
  bool ok = std::all_of(lp.objective.begin(), lp.objective.end(), finite) &&
            std::all_of(lp.limits.begin(), lp.limits.end(), finite);
  for (const auto& row : lp.constraints) {
    ok = ok && std::all_of(row.begin(), row.end(), finite);
  }
  if (!ok) throw StructureError("non-finite coefficient");
}

}  // namespace

std::string_view LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "Optimal";
    case LpStatus::kInfeasible:
      return "Infeasible";
    case LpStatus::kUnbounded:
      return "Unbounded";
  }
  return "";
}

DenseLp ToDenseLp(const CanonicalFormulation& formulation) {
  const auto convert = [](const std::vector<Decimal>& values) {
    std::vector<double> out;
    out.reserve(values.size());
    for (const Decimal& value : values) out.push_back(value.ToDouble());
    return out;
  };
  DenseLp lp;
  lp.objective = convert(formulation.objective);
  for (const auto& row : formulation.constraints) {
    lp.constraints.push_back(convert(row));
  }
  lp.limits = convert(formulation.limits);
  if (lp.objective.size() != formulation.n_vars) {
    throw StructureError("objective has " + std::to_string(lp.objective.size()) +
                         " entries but n_vars is " +
                         std::to_string(formulation.n_vars));
  }
  return lp;
}

LpSolution SolveLp(const DenseLp& lp, double eps) {
  CheckDimensions(lp);
  Tableau tableau(lp, eps);
  LpSolution solution;
  if (!tableau.FindFeasibleBasis()) {
    solution.status = LpStatus::kInfeasible;
    return solution;
  }
  solution.status = tableau.Minimize(lp.objective);
  if (solution.status != LpStatus::kOptimal) return solution;
  solution.x = tableau.Solution();
  for (double& value : solution.x) {
    if (value < 0 && value > -eps) value = 0.0;
  }
  solution.objective_value = 0.0;
  for (std::size_t j = 0; j < lp.objective.size(); ++j) {
    solution.objective_value += lp.objective[j] * solution.x[j];
  }
  return solution;
}

LpSolution SolveLp(const CanonicalFormulation& formulation, double eps) {
  return SolveLp(ToDenseLp(formulation), eps);
}

}  // namespace formgen
