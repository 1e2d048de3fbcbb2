#ifndef FORMGEN_IR_H_
#define FORMGEN_IR_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "formgen/declaration.h"

namespace formgen {

// Intermediate representation of declarations, one <DECLARATION> element per
// objective or constraint:
//
//   <DECLARATION><OBJ_DIR> minimize </OBJ_DIR><OBJ_NAME> cost </OBJ_NAME>
//     [is] <VAR> x </VAR> [TIMES] <PARAM> ONE </PARAM></DECLARATION>
//   <DECLARATION><CONST_DIR> at least </CONST_DIR><OPERATOR> GREATER_OR_EQUAL
//     </OPERATOR><LIMIT> 3000 </LIMIT> [is] <VAR> x </VAR> [TIMES]
//     <PARAM> 50 </PARAM></DECLARATION>
//
// (shown wrapped; the serializer emits no line breaks). A coefficient of
// exactly 1 is written as the token ONE.

enum class ParseMode { kStrict, kLenient };

struct ParseDiagnostic {
  std::size_t position = 0;  // byte offset into the IR string
  std::string message;

  friend bool operator==(const ParseDiagnostic&,
                         const ParseDiagnostic&) = default;
};

struct ParsedDeclarations {
  std::vector<Declaration> declarations;
  std::vector<ParseDiagnostic> diagnostics;
};

// Bit-exact serializer. Declarations must satisfy ValidateDeclaration.
std::string SerializeDeclarations(std::span<const Declaration> declarations);
std::string SerializeDeclaration(const Declaration& declaration);

// Whitespace-tolerant parser. In strict mode the first grammar violation
// throws ParseError with its byte offset. In lenient mode a malformed
// declaration is skipped with a diagnostic and parsing resumes at the next
// <DECLARATION>; lenient parsing never throws. A variable repeated inside one
// declaration has its coefficients summed and produces a diagnostic in both
// modes.
ParsedDeclarations ParseDeclarations(std::string_view ir, ParseMode mode);

}  // namespace formgen

#endif  // FORMGEN_IR_H_
