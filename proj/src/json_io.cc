#include "formgen/json_io.h"

#include <limits>

#include "formgen/error.h"

namespace formgen {
namespace {

std::vector<Decimal> VectorFromJson(const Json& json, const std::string& path) {
  if (!json.is_array()) throw ValidationError("expected an array", path);
  std::vector<Decimal> out;
  out.reserve(json.size());
  for (std::size_t i = 0; i < json.size(); ++i) {
    out.push_back(DecimalFromJson(json[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json VectorToJson(const std::vector<Decimal>& values) {
  Json out = Json::array();
  for (const Decimal& value : values) out.push_back(DecimalToJson(value));
  return out;
}

Json TermsToJson(const std::vector<Term>& terms) {
  Json out = Json::array();
  for (const Term& term : terms) {
    out.push_back({{"variable", term.variable},
                   {"coefficient", term.coefficient.ToString()}});
  }
  return out;
}

}  // namespace

Json DecimalToJson(const Decimal& value) {
  if (value.exponent() >= 0 && value.exponent() <= 18) {
    Decimal::Mantissa integral = value.mantissa();
    for (int i = 0; i < value.exponent(); ++i) integral *= 10;
    if (integral >= std::numeric_limits<std::int64_t>::min() &&
        integral <= std::numeric_limits<std::int64_t>::max()) {
      return integral.convert_to<std::int64_t>();
    }
  }
  return value.ToDouble();
}

Decimal DecimalFromJson(const Json& value, const std::string& path) {
  if (value.is_string()) {
    auto parsed = Decimal::Parse(value.get<std::string>());
    if (parsed) return *parsed;
  } else if (value.is_number_unsigned()) {
    return Decimal(Decimal::Mantissa(value.get<std::uint64_t>()), 0);
  } else if (value.is_number_integer()) {
    return Decimal(value.get<std::int64_t>());
  } else if (value.is_number_float()) {
    return Decimal::FromDouble(value.get<double>());
  }
  throw ValidationError("expected a number", path);
}

Json DeclarationToJson(const Declaration& declaration) {
  if (const auto* objective = std::get_if<Objective>(&declaration)) {
    return {{"kind", "objective"},
            {"direction", objective->direction},
            {"name", objective->name},
            {"terms", TermsToJson(objective->terms)}};
  }
  const auto& constraint = std::get<Constraint>(declaration);
  return {{"kind", "constraint"},
          {"direction", constraint.direction},
          {"operator", std::string(OperatorName(constraint.op))},
          {"limit", constraint.limit.ToString()},
          {"terms", TermsToJson(constraint.terms)}};
}

Json DiagnosticToJson(const ParseDiagnostic& diagnostic) {
  return {{"position", diagnostic.position}, {"message", diagnostic.message}};
}

Json CanonicalToJson(const CanonicalFormulation& formulation) {
  Json constraints = Json::array();
  for (const auto& row : formulation.constraints) {
    constraints.push_back(VectorToJson(row));
  }
  return {{"n_vars", formulation.n_vars},
          {"objective", VectorToJson(formulation.objective)},
          {"constraints", std::move(constraints)},
          {"limits", VectorToJson(formulation.limits)}};
}

CanonicalFormulation CanonicalFromJson(const Json& json) {
  if (!json.is_object()) throw ValidationError("expected a JSON object");
  CanonicalFormulation out;
  auto objective = json.find("objective");
  if (objective == json.end()) {
    throw ValidationError("missing required field", "objective");
  }
  out.objective = VectorFromJson(*objective, "objective");
  out.n_vars = out.objective.size();
  if (auto n_vars = json.find("n_vars"); n_vars != json.end()) {
    if (!n_vars->is_number_unsigned()) {
      throw ValidationError("expected a non-negative integer", "n_vars");
    }
    out.n_vars = n_vars->get<std::size_t>();
  }
  if (auto constraints = json.find("constraints"); constraints != json.end()) {
    if (!constraints->is_array()) {
      throw ValidationError("expected an array", "constraints");
    }
    for (std::size_t i = 0; i < constraints->size(); ++i) {
      out.constraints.push_back(VectorFromJson(
          (*constraints)[i], "constraints[" + std::to_string(i) + "]"));
    }
  }
  if (auto limits = json.find("limits"); limits != json.end()) {
    out.limits = VectorFromJson(*limits, "limits");
  }
  return out;
}

Json LpSolutionToJson(const LpSolution& solution) {
  Json out = {{"status", std::string(LpStatusName(solution.status))}};
  if (solution.status == LpStatus::kOptimal) {
    out["x"] = solution.x;
    out["objective_value"] = solution.objective_value;
  }
  return out;
}

Json ScoreReportToJson(const ScoreReport& report) {
  Json per_example = Json::array();
  for (const ExampleScore& score : report.per_example) {
    per_example.push_back({{"id", score.id},
                           {"D", score.declarations},
                           {"FP", score.false_positives},
                           {"FN", score.false_negatives}});
  }
  return {{"accuracy", report.accuracy},
          {"N", report.examples},
          {"D", report.total_declarations},
          {"FP", report.total_false_positives},
          {"FN", report.total_false_negatives},
          {"per_example", std::move(per_example)}};
}

Json F1ReportToJson(const F1Report& report) {
  return {{"true_positives", report.true_positives},
          {"false_positives", report.false_positives},
          {"false_negatives", report.false_negatives},
          {"precision", report.precision},
          {"recall", report.recall},
          {"f1", report.f1}};
}

}  // namespace formgen
