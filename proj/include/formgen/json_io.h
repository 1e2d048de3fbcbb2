#ifndef FORMGEN_JSON_IO_H_
#define FORMGEN_JSON_IO_H_

// JSON views of library results, as printed by the command-line tool. These
// use nlohmann::json, whose objects keep keys sorted.

#include "json.hpp"

#include "formgen/canonical.h"
#include "formgen/declaration.h"
#include "formgen/ir.h"
#include "formgen/lp_solve.h"
#include "formgen/metrics.h"

namespace formgen {

using Json = nlohmann::json;

// Integral values that fit in 64 bits become JSON integers, everything else
// a double.
Json DecimalToJson(const Decimal& value);
// Accepts a JSON number or a decimal string; throws ValidationError.
Decimal DecimalFromJson(const Json& value, const std::string& path);

Json DeclarationToJson(const Declaration& declaration);
Json DiagnosticToJson(const ParseDiagnostic& diagnostic);

Json CanonicalToJson(const CanonicalFormulation& formulation);
// Reads {"n_vars", "objective", "constraints", "limits"}; n_vars is optional
// and defaults to the objective length. Only shapes of JSON values are
// checked here; dimension agreement is left to the solver.
CanonicalFormulation CanonicalFromJson(const Json& json);

Json LpSolutionToJson(const LpSolution& solution);
Json ScoreReportToJson(const ScoreReport& report);
Json F1ReportToJson(const F1Report& report);

}  // namespace formgen

#endif  // FORMGEN_JSON_IO_H_
