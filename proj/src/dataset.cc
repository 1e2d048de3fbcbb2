#include "formgen/dataset.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "formgen/error.h"
#include "formgen/utf8.h"

namespace formgen {
namespace {

const OrderedJson& Field(const OrderedJson& object, const char* key,
                         const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw ValidationError("missing required field",
                          path.empty() ? key : path + "." + key);
  }
  return *it;
}

std::string StringField(const OrderedJson& object, const char* key,
                        const std::string& path) {
  const OrderedJson& value = Field(object, key, path);
  if (!value.is_string()) {
    throw ValidationError("expected a string",
                          path.empty() ? key : path + "." + key);
  }
  return value.get<std::string>();
}

std::size_t IndexValue(const OrderedJson& value, const std::string& path) {
  if (!value.is_number_unsigned()) {
    throw ValidationError("expected a non-negative integer", path);
  }
  return value.get<std::size_t>();
}

Decimal NumberValue(const OrderedJson& value, const std::string& path) {
  if (value.is_string()) {
    auto parsed = Decimal::Parse(value.get<std::string>());
    if (!parsed) {
      throw ValidationError(
          "'" + value.get<std::string>() + "' is not a decimal number", path);
    }
    return *parsed;
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned()
               ? Decimal(Decimal::Mantissa(value.get<std::uint64_t>()), 0)
               : Decimal(value.get<std::int64_t>());
  }
  if (value.is_number_float()) return Decimal::FromDouble(value.get<double>());
  throw ValidationError("expected a number or a decimal string", path);
}

void CheckUniqueVariables(const std::vector<Term>& terms,
                          const std::string& path) {
  std::set<std::string> seen;
  for (const Term& term : terms) {
    if (!seen.insert(NormalizeVariableName(term.variable)).second) {
      throw ValidationError("variable '" + term.variable + "' listed twice",
                            path);
    }
  }
}

Declaration RecordToDeclaration(const OrderedJson& record,
                                const std::string& path) {
  if (!record.is_object()) throw ValidationError("expected an object", path);
  const std::string type = StringField(record, "type", path);
  if (type == "objvar") {
    Objective objective;
    objective.direction = StringField(record, "direction", path);
    objective.name = StringField(record, "name", path);
    const OrderedJson& vars = Field(record, "vars", path);
    if (!vars.is_array()) {
      throw ValidationError("expected an array", path + ".vars");
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (!vars[i].is_string()) {
        throw ValidationError("expected a string",
                              path + ".vars[" + std::to_string(i) + "]");
      }
      objective.terms.push_back({vars[i].get<std::string>(), Decimal(1)});
    }
    CheckUniqueVariables(objective.terms, path + ".vars");
    return objective;
  }
  if (type == "linear") {
    Constraint constraint;
    constraint.direction = StringField(record, "direction", path);
    constraint.limit = NumberValue(Field(record, "limit", path), path + ".limit");
    const std::string op = StringField(record, "operator", path);
    auto parsed_op = OperatorFromName(op);
    if (!parsed_op) {
      throw ValidationError("unsupported operator '" + op + "'",
                            path + ".operator");
    }
    constraint.op = *parsed_op;
    const OrderedJson& terms = Field(record, "terms", path);
    if (!terms.is_object()) {
      throw ValidationError("expected an object", path + ".terms");
    }
    for (const auto& [name, coefficient] : terms.items()) {
      constraint.terms.push_back(
          {name, NumberValue(coefficient, path + ".terms." + name)});
    }
    CheckUniqueVariables(constraint.terms, path + ".terms");
    return constraint;
  }
  throw UnsupportedDeclarationError(type, path + ".type");
}

OrderedJson TermsToJson(const std::vector<Term>& terms) {
  OrderedJson out = OrderedJson::object();
  for (const Term& term : terms) out[term.variable] = term.coefficient.ToString();
  return out;
}

}  // namespace

std::vector<Declaration> GoldToDeclarations(const OrderedJson& records) {
  if (!records.is_array()) throw ValidationError("expected an array", "gold");
  std::vector<Declaration> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string path = "gold[" + std::to_string(i) + "]";
    Declaration declaration = RecordToDeclaration(records[i], path);
    try {
      ValidateDeclaration(declaration);
    } catch (const ValidationError& e) {
      throw ValidationError(e.detail(), path + "." + e.field_path());
    }
    out.push_back(std::move(declaration));
  }
  return out;
}

OrderedJson DeclarationsToGold(std::span<const Declaration> declarations) {
  OrderedJson out = OrderedJson::array();
  for (std::size_t i = 0; i < declarations.size(); ++i) {
    const Declaration& declaration = declarations[i];
    OrderedJson record;
    if (const auto* objective = std::get_if<Objective>(&declaration)) {
      record["type"] = "objvar";
      record["direction"] = objective->direction;
      record["name"] = objective->name;
      OrderedJson vars = OrderedJson::array();
      for (const Term& term : objective->terms) {
        if (!term.coefficient.IsOne()) {
          throw ValidationError(
              "objective coefficient " + term.coefficient.ToString() +
                  " cannot be stored in an objvar record",
              "gold[" + std::to_string(i) + "].vars");
        }
        vars.push_back(term.variable);
      }
      record["vars"] = std::move(vars);
    } else {
      const auto& constraint = std::get<Constraint>(declaration);
      record["type"] = "linear";
      record["direction"] = constraint.direction;
      record["limit"] = constraint.limit.ToString();
      record["terms"] = TermsToJson(constraint.terms);
      record["operator"] = std::string(OperatorName(constraint.op));
    }
    out.push_back(std::move(record));
  }
  return out;
}

void ValidateProblem(const Problem& problem, const LoadOptions& options) {
  if (problem.id.empty()) throw ValidationError("must not be empty", "id");
  auto offsets = utf8::CodePointOffsets(problem.text);
  if (!offsets) throw ValidationError("text is not valid UTF-8", "text");
  const std::size_t length = offsets->size() - 1;
  if (!std::is_sorted(problem.spans.begin(), problem.spans.end(),
                      [](const EntitySpan& a, const EntitySpan& b) {
                        return a.start < b.start;
                      })) {
    throw ValidationError("spans are not sorted by start offset", "spans");
  }
  ValidateSpans(problem.spans, length);

  if (options.require_mapped_var_spans) {
    for (std::size_t i = 0; i < problem.spans.size(); ++i) {
      const EntitySpan& span = problem.spans[i];
      if (span.label != EntityLabel::kVar) continue;
      std::string_view surface = std::string_view(problem.text).substr(
          (*offsets)[span.start], (*offsets)[span.end] - (*offsets)[span.start]);
      if (!problem.order_mapping.IsAliasOf(surface)) {
        throw ValidationError("VAR span '" + std::string(surface) +
                                  "' does not name a mapped variable",
                              "spans[" + std::to_string(i) + "]");
      }
    }
  }

  if (problem.gold) {
    for (std::size_t i = 0; i < problem.gold->size(); ++i) {
      const Declaration& declaration = (*problem.gold)[i];
      const std::string path = "gold[" + std::to_string(i) + "]";
      try {
        ValidateDeclaration(declaration);
      } catch (const ValidationError& e) {
        throw ValidationError(e.detail(), path + "." + e.field_path());
      }
      for (const Term& term : TermsOf(declaration)) {
        if (!problem.order_mapping.Find(term.variable)) {
          throw ValidationError("variable '" + term.variable +
                                    "' is not in the order mapping",
                                path);
        }
      }
    }
  }
}

Problem ProblemFromJson(const OrderedJson& json, const LoadOptions& options) {
  if (!json.is_object()) throw ValidationError("expected a JSON object");
  Problem problem;
  problem.id = StringField(json, "id", "");
  problem.text = StringField(json, "text", "");

  const OrderedJson& spans = Field(json, "spans", "");
  if (!spans.is_array()) throw ValidationError("expected an array", "spans");
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const std::string path = "spans[" + std::to_string(i) + "]";
    const OrderedJson& span = spans[i];
    if (!span.is_object()) throw ValidationError("expected an object", path);
    EntitySpan parsed;
    parsed.start = IndexValue(Field(span, "start", path), path + ".start");
    parsed.end = IndexValue(Field(span, "end", path), path + ".end");
    const std::string label = StringField(span, "label", path);
    auto parsed_label = LabelFromName(label);
    if (!parsed_label) {
      throw ValidationError("unknown entity label '" + label + "'",
                            path + ".label");
    }
    parsed.label = *parsed_label;
    problem.spans.push_back(parsed);
  }
  std::stable_sort(problem.spans.begin(), problem.spans.end(),
                   [](const EntitySpan& a, const EntitySpan& b) {
                     return a.start < b.start;
                   });

  const OrderedJson& mapping = Field(json, "order_mapping", "");
  if (!mapping.is_object()) {
    throw ValidationError("expected an object", "order_mapping");
  }
  std::vector<OrderMapping::Entry> entries;
  for (const auto& [name, index] : mapping.items()) {
    entries.emplace_back(name, IndexValue(index, "order_mapping." + name));
  }
  problem.order_mapping = OrderMapping(std::move(entries));

  if (auto gold = json.find("gold"); gold != json.end() && !gold->is_null()) {
    problem.gold = GoldToDeclarations(*gold);
  }
  ValidateProblem(problem, options);
  return problem;
}

OrderedJson ProblemToJson(const Problem& problem) {
  OrderedJson out;
  out["id"] = problem.id;
  out["text"] = problem.text;
  OrderedJson spans = OrderedJson::array();
  for (const EntitySpan& span : problem.spans) {
    OrderedJson entry;
    entry["start"] = span.start;
    entry["end"] = span.end;
    entry["label"] = std::string(LabelName(span.label));
    spans.push_back(std::move(entry));
  }
  out["spans"] = std::move(spans);
  OrderedJson mapping = OrderedJson::object();
  for (const auto& [name, index] : problem.order_mapping.entries()) {
    mapping[name] = index;
  }
  out["order_mapping"] = std::move(mapping);
  if (problem.gold) out["gold"] = DeclarationsToGold(*problem.gold);
  return out;
}

std::vector<Problem> ReadDataset(std::istream& in, const LoadOptions& options) {
  std::vector<Problem> problems;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    OrderedJson json;
    try {
      json = OrderedJson::parse(line);
    } catch (const OrderedJson::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(), line_number,
                       e.byte == 0 ? std::nullopt
                                   : std::optional<std::size_t>(e.byte - 1));
    }
    try {
      Problem problem = ProblemFromJson(json, options);
      if (!ids.insert(problem.id).second) {
        throw ValidationError("duplicate problem id '" + problem.id + "'",
                              "id");
      }
      problems.push_back(std::move(problem));
    } catch (const UnsupportedDeclarationError& e) {
      throw e.Located(line_number, "");
    } catch (const ValidationError& e) {
      throw e.Located(line_number, "");
    }
  }
  return problems;
}

std::vector<Problem> LoadDataset(const std::filesystem::path& path,
                                 const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return ReadDataset(in, options);
}

void WriteDataset(std::span<const Problem> problems, std::ostream& out) {
  for (const Problem& problem : problems) {
    ValidateProblem(problem, {.require_mapped_var_spans = false});
    out << ProblemToJson(problem).dump(-1, ' ', false,
                                       OrderedJson::error_handler_t::strict)
        << '\n';
  }
}

void SaveDataset(std::span<const Problem> problems,
                 const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  WriteDataset(problems, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace formgen
