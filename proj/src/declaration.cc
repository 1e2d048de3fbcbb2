#include "formgen/declaration.h"

#include "formgen/error.h"

namespace formgen {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

void CheckText(std::string_view text, const std::string& path,
               bool allow_empty) {
  if (text.empty()) {
    if (allow_empty) return;
    throw ValidationError("must not be empty", path);
  }
  if (!IsValidIrText(text)) {
    throw ValidationError("'" + std::string(text) +
                              "' has surrounding whitespace or contains one "
                              "of '<', '>', line break",
                          path);
  }
}

void CheckTerms(const std::vector<Term>& terms) {
  if (terms.empty()) throw ValidationError("must not be empty", "terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    CheckText(terms[i].variable, "terms[" + std::to_string(i) + "].variable",
              false);
  }
}

}  // namespace

std::string_view OperatorName(Operator op) {
  return op == Operator::kLessOrEqual ? "LESS_OR_EQUAL" : "GREATER_OR_EQUAL";
}

std::optional<Operator> OperatorFromName(std::string_view name) {
  if (name == "LESS_OR_EQUAL") return Operator::kLessOrEqual;
  if (name == "GREATER_OR_EQUAL") return Operator::kGreaterOrEqual;
  return std::nullopt;
}

bool IsValidIrText(std::string_view text) {
  if (text.empty()) return true;
  if (IsSpace(text.front()) || IsSpace(text.back())) return false;
  for (char c : text) {
    if (c == '<' || c == '>' || c == '\n' || c == '\r') return false;
  }
  return true;
}

void ValidateDeclaration(const Declaration& declaration) {
  if (const auto* objective = std::get_if<Objective>(&declaration)) {
    CheckText(objective->direction, "direction", false);
    CheckText(objective->name, "name", true);
    CheckTerms(objective->terms);
  } else {
    const auto& constraint = std::get<Constraint>(declaration);
    CheckText(constraint.direction, "direction", false);
    CheckTerms(constraint.terms);
  }
}

}  // namespace formgen
