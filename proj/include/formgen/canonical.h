#ifndef FORMGEN_CANONICAL_H_
#define FORMGEN_CANONICAL_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "formgen/decimal.h"
#include "formgen/declaration.h"
#include "formgen/order_mapping.h"

namespace formgen {

// minimize objective·x  subject to  constraints·x <= limits,  x >= 0.
// Column j belongs to the variable with order-mapping index j.
struct CanonicalFormulation {
  std::size_t n_vars = 0;
  std::vector<Decimal> objective;
  std::vector<std::vector<Decimal>> constraints;
  std::vector<Decimal> limits;

  friend bool operator==(const CanonicalFormulation&,
                         const CanonicalFormulation&) = default;
};

enum class ObjectiveSense { kMinimize, kMaximize };

// Reads the sense off the objective's direction text ("minimize", "maximum",
// "most", "least", ...). Throws StructureError if the text names neither.
ObjectiveSense ClassifyObjectiveDirection(std::string_view direction);

// Exactly one objective is required; constraint rows keep declaration order.
// Maximization objectives and >= rows (with their limits) are negated.
// Throws StructureError on a wrong objective count or an all-zero constraint
// row, MappingError on an unknown variable.
CanonicalFormulation Canonicalize(std::span<const Declaration> declarations,
                                  const OrderMapping& mapping);

// A single declaration in canonical form: the objective vector, or one row
// with its limit.
struct CanonicalDeclaration {
  bool is_objective = false;
  std::vector<Decimal> coefficients;
  Decimal limit;  // zero for objectives
};

CanonicalDeclaration CanonicalizeDeclaration(const Declaration& declaration,
                                             const OrderMapping& mapping);

inline const Decimal& DefaultEqualityTolerance() {
  static const Decimal tolerance = Decimal::FromString("1e-9");
  return tolerance;
}

// Same kind and every canonical entry within `tolerance` (inclusive).
bool CanonicalEqual(const CanonicalDeclaration& a,
                    const CanonicalDeclaration& b, const Decimal& tolerance);

// Canonical equality; the objective name and direction wording are ignored
// except for the sense they imply. Throws MappingError for unknown variables.
bool DeclarationsEqual(const Declaration& a, const Declaration& b,
                       const OrderMapping& mapping,
                       const Decimal& tolerance = DefaultEqualityTolerance());

// Same declaration stated the other way round: a minimization becomes a
// maximization of the negated objective, a >= constraint a <= constraint with
// negated coefficients and limit, and vice versa. Canonical form is unchanged.
Declaration InvertDeclaration(const Declaration& declaration);

// Plain-text algebraic form, e.g.
//   Objective:
//   min x + y
//   Constraints:
//   50 x + 70 y >= 3000
// Columns are named x, y, z for up to three variables and x1..xn otherwise.
std::string RenderAlgebraic(std::span<const Declaration> declarations,
                            const OrderMapping& mapping);

}  // namespace formgen

#endif  // FORMGEN_CANONICAL_H_
