#include "formgen/canonical.h"

#include <array>

#include "formgen/error.h"

namespace formgen {
namespace {

std::vector<Decimal> Row(const std::vector<Term>& terms,
                         const OrderMapping& mapping, bool negate) {
  std::vector<Decimal> row(mapping.size());
  for (const Term& term : terms) {
    const std::size_t column = mapping.Resolve(term.variable);
    row[column] += negate ? -term.coefficient : term.coefficient;
  }
  return row;
}

bool AllZero(const std::vector<Decimal>& row) {
  for (const Decimal& value : row) {
    if (!value.IsZero()) return false;
  }
  return true;
}

bool Contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

std::string ColumnSymbol(std::size_t column, std::size_t n_vars) {
  static constexpr std::array<const char*, 3> kShort = {"x", "y", "z"};
  if (n_vars <= kShort.size()) return kShort[column];
  return "x" + std::to_string(column + 1);
}

// "50 x + 70 y", "-x + 2.5 z"; "0" when every coefficient vanishes.
std::string RenderLinear(const std::vector<Decimal>& row) {
  std::string out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].IsZero()) continue;
    const bool negative = row[j].Sign() < 0;
    const Decimal magnitude = row[j].Abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!magnitude.IsOne()) out += magnitude.ToString() + " ";
    out += ColumnSymbol(j, row.size());
  }
  return out.empty() ? "0" : out;
}

}  // namespace

ObjectiveSense ClassifyObjectiveDirection(std::string_view direction) {
  const std::string text = NormalizeVariableName(direction);
  if (Contains(text, "max")) return ObjectiveSense::kMaximize;
  if (Contains(text, "min")) return ObjectiveSense::kMinimize;
  for (std::string_view word : {"most", "greatest", "largest", "highest"}) {
    if (Contains(text, word)) return ObjectiveSense::kMaximize;
  }
  for (std::string_view word : {"least", "fewest", "smallest", "lowest"}) {
    if (Contains(text, word)) return ObjectiveSense::kMinimize;
  }
  throw StructureError("objective direction '" + std::string(direction) +
                       "' is neither a maximization nor a minimization");
}

CanonicalDeclaration CanonicalizeDeclaration(const Declaration& declaration,
                                             const OrderMapping& mapping) {
  CanonicalDeclaration out;
  if (const auto* objective = std::get_if<Objective>(&declaration)) {
    out.is_objective = true;
    const bool maximize = ClassifyObjectiveDirection(objective->direction) ==
                          ObjectiveSense::kMaximize;
    out.coefficients = Row(objective->terms, mapping, maximize);
    return out;
  }
  const auto& constraint = std::get<Constraint>(declaration);
  const bool lower_bound = constraint.op == Operator::kGreaterOrEqual;
  out.coefficients = Row(constraint.terms, mapping, lower_bound);
  out.limit = lower_bound ? -constraint.limit : constraint.limit;
  return out;
}

CanonicalFormulation Canonicalize(std::span<const Declaration> declarations,
                                  const OrderMapping& mapping) {
  CanonicalFormulation out;
  out.n_vars = mapping.size();
  std::size_t objectives = 0;
  for (std::size_t i = 0; i < declarations.size(); ++i) {
    CanonicalDeclaration canonical =
        CanonicalizeDeclaration(declarations[i], mapping);
    if (canonical.is_objective) {
      ++objectives;
      out.objective = std::move(canonical.coefficients);
      continue;
    }
    if (AllZero(canonical.coefficients)) {
      throw StructureError("constraint " + std::to_string(i) +
                           " has no nonzero coefficient");
    }
    out.constraints.push_back(std::move(canonical.coefficients));
    out.limits.push_back(std::move(canonical.limit));
  }
  if (objectives != 1) {
    throw StructureError("expected exactly one objective, found " +
                         std::to_string(objectives));
  }
  return out;
}

bool CanonicalEqual(const CanonicalDeclaration& a,
                    const CanonicalDeclaration& b, const Decimal& tolerance) {
  if (a.is_objective != b.is_objective) return false;
  if (a.coefficients.size() != b.coefficients.size()) return false;
  for (std::size_t j = 0; j < a.coefficients.size(); ++j) {
    if ((a.coefficients[j] - b.coefficients[j]).Abs() > tolerance) return false;
  }
  return (a.limit - b.limit).Abs() <= tolerance;
}

bool DeclarationsEqual(const Declaration& a, const Declaration& b,
                       const OrderMapping& mapping, const Decimal& tolerance) {
  return CanonicalEqual(CanonicalizeDeclaration(a, mapping),
                        CanonicalizeDeclaration(b, mapping), tolerance);
}

Declaration InvertDeclaration(const Declaration& declaration) {
  if (const auto* objective = std::get_if<Objective>(&declaration)) {
    Objective out = *objective;
    out.direction = ClassifyObjectiveDirection(objective->direction) ==
                            ObjectiveSense::kMaximize
                        ? "minimize"
                        : "maximize";
    for (Term& term : out.terms) term.coefficient = -term.coefficient;
    return out;
  }
  Constraint out = std::get<Constraint>(declaration);
  out.op = out.op == Operator::kLessOrEqual ? Operator::kGreaterOrEqual
                                            : Operator::kLessOrEqual;
  out.limit = -out.limit;
  for (Term& term : out.terms) term.coefficient = -term.coefficient;
  return out;
}

std::string RenderAlgebraic(std::span<const Declaration> declarations,
                            const OrderMapping& mapping) {
  std::string objective_lines;
  std::string constraint_lines;
  for (const Declaration& declaration : declarations) {
    if (const auto* objective = std::get_if<Objective>(&declaration)) {
      const bool maximize = ClassifyObjectiveDirection(objective->direction) ==
                            ObjectiveSense::kMaximize;
      objective_lines += (maximize ? "max " : "min ") +
                         RenderLinear(Row(objective->terms, mapping, false)) +
                         "\n";
    } else {
      const auto& constraint = std::get<Constraint>(declaration);
      constraint_lines +=
          RenderLinear(Row(constraint.terms, mapping, false)) +
          (constraint.op == Operator::kLessOrEqual ? " <= " : " >= ") +
          constraint.limit.ToString() + "\n";
    }
  }
  return "Objective:\n" + objective_lines + "Constraints:\n" + constraint_lines;
}

}  // namespace formgen
