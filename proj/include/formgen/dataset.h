#ifndef FORMGEN_DATASET_H_
#define FORMGEN_DATASET_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "formgen/declaration.h"
#include "formgen/entity.h"
#include "formgen/order_mapping.h"

namespace formgen {

// Key order of JSON objects is significant (term order of constraints), so
// dataset files are read and written with insertion-ordered objects.
using OrderedJson = nlohmann::ordered_json;

struct Problem {
  std::string id;
  std::string text;
  std::vector<EntitySpan> spans;  // sorted by start, code-point offsets
  OrderMapping order_mapping;
  std::optional<std::vector<Declaration>> gold;

  friend bool operator==(const Problem&, const Problem&) = default;
};

struct LoadOptions {
  // Require every VAR span to name a mapped variable (or a plural/singular
  // alias of one). Datasets produced by span corruption legitimately break
  // this and are loaded with it switched off.
  bool require_mapped_var_spans = true;
};

// Checks every Problem invariant; throws ValidationError.
void ValidateProblem(const Problem& problem, const LoadOptions& options = {});

// One JSON object per line; blank lines are ignored. Throws ParseError for
// malformed JSON and ValidationError (with line number and field path) for
// schema or invariant violations. Duplicate ids are rejected.
std::vector<Problem> ReadDataset(std::istream& in,
                                 const LoadOptions& options = {});
std::vector<Problem> LoadDataset(const std::filesystem::path& path,
                                 const LoadOptions& options = {});

// Inverse of ReadDataset: ReadDataset(WriteDataset(P)) == P for valid P.
void WriteDataset(std::span<const Problem> problems, std::ostream& out);
// Throws IoError when the file cannot be written.
void SaveDataset(std::span<const Problem> problems,
                 const std::filesystem::path& path);

Problem ProblemFromJson(const OrderedJson& json,
                        const LoadOptions& options = {});
OrderedJson ProblemToJson(const Problem& problem);

// Converts gold records. {"type": "objvar", "direction", "name", "vars": [..]}
// becomes an Objective with unit coefficients; {"type": "linear",
// "direction", "limit", "terms": {var: coef}, "operator"} becomes a
// Constraint. Numbers may be JSON numbers or decimal strings. Throws
// UnsupportedDeclarationError for any other type and ValidationError for a
// missing or mistyped field.
std::vector<Declaration> GoldToDeclarations(const OrderedJson& records);

// Inverse of GoldToDeclarations. An objective with a coefficient other than
// 1 has no objvar encoding and raises ValidationError.
OrderedJson DeclarationsToGold(std::span<const Declaration> declarations);

}  // namespace formgen

#endif  // FORMGEN_DATASET_H_
