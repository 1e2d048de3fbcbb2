#include "formgen/ir.h"

#include <map>
#include <optional>

#include "formgen/error.h"
#include "formgen/order_mapping.h"

namespace formgen {
namespace {

constexpr std::string_view kOpen = "<DECLARATION>";
constexpr std::string_view kClose = "</DECLARATION>";

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

void AppendTagged(std::string& out, std::string_view tag,
                  std::string_view content) {
  out.append("<").append(tag).append("> ");
  out.append(content);
  out.append(" </").append(tag).append(">");
}

void AppendTerms(std::string& out, const std::vector<Term>& terms) {
  out.append(" [is] ");
  for (const Term& term : terms) {
    AppendTagged(out, "VAR", term.variable);
    out.append(" [TIMES] ");
    AppendTagged(out, "PARAM", term.coefficient.IsOne()
                                   ? std::string("ONE")
                                   : term.coefficient.ToString());
  }
}

// Recursive-descent parser over the body of one declaration, i.e. the bytes
// between <DECLARATION> and </DECLARATION>. Offsets are absolute.
class BodyParser {
 public:
  BodyParser(std::string_view ir, std::size_t begin, std::size_t end,
             std::vector<ParseDiagnostic>* diagnostics)
      : ir_(ir), pos_(begin), end_(end), diagnostics_(diagnostics) {}

  Declaration Parse() {
    SkipSpace();
    Declaration result;
    if (LookingAt("<OBJ_DIR>")) {
      Objective objective;
      objective.direction = Direction("OBJ_DIR");
      SkipSpace();
      objective.name = Tagged("OBJ_NAME");
      objective.terms = Terms();
      result = std::move(objective);
    } else if (LookingAt("<CONST_DIR>")) {
      Constraint constraint;
      constraint.direction = Direction("CONST_DIR");
      SkipSpace();
      const std::size_t op_position = pos_;
      std::string op = Tagged("OPERATOR");
      auto parsed_op = OperatorFromName(op);
      if (!parsed_op) Fail("unknown operator '" + op + "'", op_position);
      constraint.op = *parsed_op;
      SkipSpace();
      const std::size_t limit_position = pos_;
      std::string limit = Tagged("LIMIT");
      auto parsed_limit = Decimal::Parse(limit);
      if (!parsed_limit) {
        Fail("limit '" + limit + "' is not a number", limit_position);
      }
      constraint.limit = *parsed_limit;
      constraint.terms = Terms();
      result = std::move(constraint);
    } else {
      Fail("expected <OBJ_DIR> or <CONST_DIR>", pos_);
    }
    return result;
  }

 private:
  [[noreturn]] void Fail(const std::string& message, std::size_t position) {
    throw ParseError(message, std::nullopt, position);
  }

  void SkipSpace() {
    while (pos_ < end_ && IsSpace(ir_[pos_])) ++pos_;
  }

  bool LookingAt(std::string_view token) const {
    return ir_.substr(pos_, end_ - pos_).starts_with(token);
  }

  void Expect(std::string_view token) {
    if (!LookingAt(token)) Fail("expected '" + std::string(token) + "'", pos_);
    pos_ += token.size();
  }

  // "<TAG> content </TAG>", returning the trimmed content.
  std::string Tagged(std::string_view tag) {
    const std::string open = "<" + std::string(tag) + ">";
    const std::string close = "</" + std::string(tag) + ">";
    Expect(open);
    std::string_view rest = ir_.substr(pos_, end_ - pos_);
    std::size_t close_at = rest.find(close);
    if (close_at == std::string_view::npos) {
      Fail("missing " + close, pos_);
    }
    std::string_view content = rest.substr(0, close_at);
    std::size_t bad = content.find_first_of("<>");
    if (bad != std::string_view::npos) {
      Fail("unexpected markup inside <" + std::string(tag) + ">", pos_ + bad);
    }
    while (!content.empty() && IsSpace(content.front())) content.remove_prefix(1);
    while (!content.empty() && IsSpace(content.back())) content.remove_suffix(1);
    if (content.find_first_of("\r\n") != std::string_view::npos) {
      Fail("line break inside <" + std::string(tag) + ">", pos_);
    }
    pos_ += close_at + close.size();
    return std::string(content);
  }

  std::string Direction(std::string_view tag) {
    const std::size_t position = pos_;
    std::string direction = Tagged(tag);
    if (direction.empty()) Fail("empty <" + std::string(tag) + ">", position);
    return direction;
  }

  std::vector<Term> Terms() {
    SkipSpace();
    Expect("[is]");
    std::vector<Term> terms;
    std::map<std::string, std::size_t> index_of;
    while (true) {
      SkipSpace();
      if (pos_ >= end_) break;
      const std::size_t term_position = pos_;
      std::string variable = Tagged("VAR");
      if (variable.empty()) Fail("empty variable name", term_position);
      SkipSpace();
      Expect("[TIMES]");
      SkipSpace();
      const std::size_t param_position = pos_;
      std::string param = Tagged("PARAM");
      Decimal coefficient;
      if (param == "ONE") {
        coefficient = Decimal(1);
      } else if (auto parsed = Decimal::Parse(param)) {
        coefficient = *parsed;
      } else {
        Fail("coefficient '" + param + "' is not a number or ONE",
             param_position);
      }
      auto [it, inserted] =
          index_of.emplace(NormalizeVariableName(variable), terms.size());
      if (inserted) {
        terms.push_back({std::move(variable), coefficient});
      } else {
        terms[it->second].coefficient += coefficient;
        diagnostics_->push_back(
            {term_position, "duplicate variable '" + variable +
                                "'; coefficients summed"});
      }
    }
    if (terms.empty()) Fail("declaration has no terms", pos_);
    return terms;
  }

  std::string_view ir_;
  std::size_t pos_;
  std::size_t end_;
  std::vector<ParseDiagnostic>* diagnostics_;
};

}  // namespace

std::string SerializeDeclaration(const Declaration& declaration) {
  std::string out(kOpen);
  if (const auto* objective = std::get_if<Objective>(&declaration)) {
    AppendTagged(out, "OBJ_DIR", objective->direction);
    AppendTagged(out, "OBJ_NAME", objective->name);
    AppendTerms(out, objective->terms);
  } else {
    const auto& constraint = std::get<Constraint>(declaration);
    AppendTagged(out, "CONST_DIR", constraint.direction);
    AppendTagged(out, "OPERATOR", OperatorName(constraint.op));
    AppendTagged(out, "LIMIT", constraint.limit.ToString());
    AppendTerms(out, constraint.terms);
  }
  out.append(kClose);
  return out;
}

std::string SerializeDeclarations(std::span<const Declaration> declarations) {
  std::string out;
  for (const Declaration& declaration : declarations) {
    out.append(SerializeDeclaration(declaration));
  }
  return out;
}

ParsedDeclarations ParseDeclarations(std::string_view ir, ParseMode mode) {
  ParsedDeclarations result;
  const bool lenient = mode == ParseMode::kLenient;
  const auto report = [&](std::size_t position, const std::string& message) {
    if (!lenient) throw ParseError(message, std::nullopt, position);
    result.diagnostics.push_back({position, message});
  };

  std::size_t pos = 0;
  while (pos < ir.size()) {
    if (IsSpace(ir[pos])) {
      ++pos;
      continue;
    }
    if (!ir.substr(pos).starts_with(kOpen)) {
      std::size_t next = ir.find(kOpen, pos);
      report(pos, "unexpected text outside <DECLARATION>");
      if (next == std::string_view::npos) break;
      pos = next;
      continue;
    }
    const std::size_t body = pos + kOpen.size();
    const std::size_t close = ir.find(kClose, body);
    const std::size_t reopen = ir.find(kOpen, body);
    if (close == std::string_view::npos ||
        (reopen != std::string_view::npos && reopen < close)) {
      report(pos, "unterminated declaration");
      if (reopen == std::string_view::npos) break;
      pos = reopen;
      continue;
    }
    std::vector<ParseDiagnostic> local;
    try {
      Declaration declaration = BodyParser(ir, body, close, &local).Parse();
      result.declarations.push_back(std::move(declaration));
      result.diagnostics.insert(result.diagnostics.end(), local.begin(),
                                local.end());
    } catch (const ParseError& e) {
      if (!lenient) throw;
      result.diagnostics.push_back(
          {e.position().value_or(body),
           "skipped declaration: " + e.detail()});
    }
    pos = close + kClose.size();
  }
  return result;
}

}  // namespace formgen
