#ifndef FORMGEN_DECLARATION_H_
#define FORMGEN_DECLARATION_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "formgen/decimal.h"

namespace formgen {

enum class Operator { kLessOrEqual, kGreaterOrEqual };

// "LESS_OR_EQUAL" / "GREATER_OR_EQUAL".
std::string_view OperatorName(Operator op);
std::optional<Operator> OperatorFromName(std::string_view name);

struct Term {
  std::string variable;
  Decimal coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Objective {
  std::string direction;  // surface text, e.g. "minimize"
  std::string name;       // e.g. "amount of time"
  std::vector<Term> terms;

  friend bool operator==(const Objective&, const Objective&) = default;
};

struct Constraint {
  std::string direction;  // surface text, e.g. "at least"
  Operator op = Operator::kLessOrEqual;
  Decimal limit;
  std::vector<Term> terms;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// One objective or one constraint. Term order is preserved as written; it
// matters for serialization but not for canonical equality.
using Declaration = std::variant<Objective, Constraint>;

inline const std::vector<Term>& TermsOf(const Declaration& d) {
  return std::visit([](const auto& x) -> const std::vector<Term>& {
    return x.terms;
  }, d);
}

// Checks that terms are non-empty and that every text field is usable inside
// the IR: no '<', '>', or line breaks, no leading or trailing whitespace.
// Variable names and the constraint direction must also be non-empty.
// Throws ValidationError.
void ValidateDeclaration(const Declaration& declaration);

// True if `text` could be stored in a text field of a declaration.
bool IsValidIrText(std::string_view text);

}  // namespace formgen

#endif  // FORMGEN_DECLARATION_H_
