#include "formgen/cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "formgen/augment.h"
#include "formgen/canonical.h"
#include "formgen/dataset.h"
#include "formgen/error.h"
#include "formgen/ir.h"
#include "formgen/json_io.h"
#include "formgen/lp_solve.h"
#include "formgen/metrics.h"
#include "formgen/noise.h"

namespace formgen::cli {
namespace {

namespace fs = std::filesystem;

// Output files may not exist yet, but their directory must.
const CLI::Validator kWritablePath(
    [](std::string& path) -> std::string {
      fs::path parent = fs::path(path).parent_path();
      if (parent.empty()) parent = ".";
      std::error_code ec;
      if (!fs::is_directory(parent, ec)) {
        return "directory " + parent.string() + " does not exist";
      }
      if (fs::is_directory(path, ec)) return path + " is a directory";
      return {};
    },
    "WRITABLE", "");

std::vector<std::string> ReadLines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string Pretty(const Json& json) { return json.dump(2) + "\n"; }

// Backslash escapes keep one example per TSV row.
std::string EscapeTsvField(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\\':
        out += "\\\\";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Predictions file: one IR string per dataset line. Parsed leniently; the
// diagnostics go to `err`.
std::vector<std::vector<Declaration>> ReadPredictions(
    const fs::path& path, const std::vector<Problem>& problems,
    ParseMode mode, std::ostream& err) {
  std::vector<std::string> lines = ReadLines(path);
  if (lines.size() != problems.size()) {
    throw ValidationError("predictions file has " +
                          std::to_string(lines.size()) +
                          " lines but the dataset has " +
                          std::to_string(problems.size()) + " problems");
  }
  std::vector<std::vector<Declaration>> out;
  out.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    ParsedDeclarations parsed;
    try {
      parsed = ParseDeclarations(lines[i], mode);
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), i + 1, e.position());
    }
    for (const ParseDiagnostic& diagnostic : parsed.diagnostics) {
      err << path.string() << ":" << i + 1 << ": offset "
          << diagnostic.position << ": " << diagnostic.message << "\n";
    }
    out.push_back(std::move(parsed.declarations));
  }
  return out;
}

ParseMode ModeFromName(const std::string& name) {
  return name == "strict" ? ParseMode::kStrict : ParseMode::kLenient;
}

struct Options {
  std::string in;
  std::string out;
  std::string gold;
  std::string pred;
  std::string ref;
  std::string hyp;
  std::string report;
  std::string mode = "lenient";
  double p = 0.0;
  std::uint64_t seed = 0;
  std::size_t shift_max = 3;
  double tol = 1e-9;
  double eps = kDefaultFeasibilityTolerance;
  bool algebraic = false;
  bool unmapped_var_spans = false;
};

LoadOptions Load(const Options& options) {
  return {.require_mapped_var_spans = !options.unmapped_var_spans};
}

void RunAugment(const Options& options, std::ostream& out, std::ostream& err) {
  std::vector<Problem> problems = LoadDataset(options.in, Load(options));
  std::string tsv;
  for (const Problem& problem : problems) {
    if (!problem.gold) {
      throw ValidationError("problem '" + problem.id +
                            "' has no gold declarations to use as target");
    }
    tsv += EscapeTsvField(AugmentText(problem.text, problem.spans));
    tsv += '\t';
    tsv += EscapeTsvField(SerializeDeclarations(*problem.gold));
    tsv += '\n';
  }
  err << "note: constraint targets use the <CONST_DIR><OPERATOR><LIMIT> [is] "
         "declaration layout\n";
  if (options.out.empty()) {
    out << tsv;
  } else {
    WriteFile(options.out, tsv);
  }
}

void RunParseIr(const Options& options, std::ostream& out, std::ostream& err) {
  const ParseMode mode = ModeFromName(options.mode);
  std::vector<std::string> lines = ReadLines(options.in);
  Json results = Json::array();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    ParsedDeclarations parsed;
    try {
      parsed = ParseDeclarations(lines[i], mode);
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), i + 1, e.position());
    }
    Json declarations = Json::array();
    for (const Declaration& d : parsed.declarations) {
      declarations.push_back(DeclarationToJson(d));
    }
    Json diagnostics = Json::array();
    for (const ParseDiagnostic& diagnostic : parsed.diagnostics) {
      diagnostics.push_back(DiagnosticToJson(diagnostic));
      err << options.in << ":" << i + 1 << ": offset " << diagnostic.position
          << ": " << diagnostic.message << "\n";
    }
    results.push_back({{"line", i + 1},
                       {"declarations", std::move(declarations)},
                       {"diagnostics", std::move(diagnostics)}});
  }
  out << Pretty(results);
}

void RunCanonicalize(const Options& options, std::ostream& out,
                     std::ostream& err) {
  std::vector<Problem> problems = LoadDataset(options.in, Load(options));
  std::vector<std::vector<Declaration>> declarations;
  if (options.pred.empty()) {
    for (const Problem& problem : problems) {
      if (!problem.gold) {
        throw ValidationError("problem '" + problem.id +
                              "' has no gold declarations");
      }
      declarations.push_back(*problem.gold);
    }
  } else {
    declarations =
        ReadPredictions(options.pred, problems, ModeFromName(options.mode), err);
  }
  // Gold must canonicalize; predictions may legitimately fail and are
  // reported per example.
  const bool tolerate_failures = !options.pred.empty();
  std::string text;
  Json results = Json::array();
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const Problem& problem = problems[i];
    try {
      CanonicalFormulation formulation =
          Canonicalize(declarations[i], problem.order_mapping);
      if (options.algebraic) {
        text += "# " + problem.id + "\n" +
                RenderAlgebraic(declarations[i], problem.order_mapping);
      } else {
        results.push_back({{"id", problem.id},
                           {"formulation", CanonicalToJson(formulation)}});
      }
    } catch (const Error& e) {
      if (!tolerate_failures) {
        throw ValidationError("problem '" + problem.id + "': " + e.what());
      }
      if (options.algebraic) {
        text += "# " + problem.id + "\nerror: " + e.what() + "\n";
      } else {
        results.push_back({{"id", problem.id}, {"error", e.what()}});
      }
    }
  }
  out << (options.algebraic ? text : Pretty(results));
}

void RunScore(const Options& options, std::ostream& out, std::ostream& err) {
  std::vector<Problem> problems = LoadDataset(options.gold, Load(options));
  std::vector<std::vector<Declaration>> predictions = ReadPredictions(
      options.pred, problems, ModeFromName(options.mode), err);
  std::vector<GoldExample> gold;
  std::vector<PredictedExample> predicted;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const Problem& problem = problems[i];
    if (!problem.gold) {
      throw ValidationError("problem '" + problem.id +
                            "' has no gold declarations");
    }
    gold.push_back({problem.id, *problem.gold, problem.order_mapping});
    predicted.push_back({problem.id, std::move(predictions[i])});
  }
  ScoreReport report =
      ScoreAccuracy(gold, predicted, Decimal::FromDouble(options.tol));
  out << Pretty(ScoreReportToJson(report));
}

void RunNoise(const Options& options, std::ostream& out, std::ostream& err) {
  std::vector<Problem> problems = LoadDataset(options.in, Load(options));
  NoiseConfig config{options.p, options.seed, options.shift_max};
  NoiseResult result = CorruptSpans(problems, config);

  Json counts = {{"drop", 0}, {"mislabel", 0}, {"shift", 0}};
  for (const Corruption& corruption : result.corruptions) {
    counts[std::string(CorruptionKindName(corruption.kind))] =
        counts[std::string(CorruptionKindName(corruption.kind))].get<int>() + 1;
  }
  std::size_t total_spans = 0;
  for (const Problem& problem : problems) total_spans += problem.spans.size();
  Json report = {{"p", options.p},
                 {"seed", options.seed},
                 {"shift_max", options.shift_max},
                 {"total_spans", total_spans},
                 {"corrupted", counts},
                 {"diagnostics", result.diagnostics},
                 {"micro_f1", F1ReportToJson(result.report)}};
  for (const std::string& diagnostic : result.diagnostics) {
    err << "warning: " << diagnostic << "\n";
  }
  SaveDataset(result.noisy, options.out);
  if (!options.report.empty()) WriteFile(options.report, Pretty(report));
  out << Pretty(report);
}

void RunNerF1(const Options& options, std::ostream& out, std::ostream&) {
  std::vector<Problem> reference = LoadDataset(options.ref, Load(options));
  std::vector<Problem> hypothesis =
      LoadDataset(options.hyp, {.require_mapped_var_spans = false});
  const auto documents = [](const std::vector<Problem>& problems) {
    std::vector<SpanDocument> out;
    for (const Problem& problem : problems) {
      out.push_back({problem.id, problem.spans});
    }
    return out;
  };
  out << Pretty(F1ReportToJson(MicroF1(documents(reference),
                                       documents(hypothesis))));
}

void RunSolve(const Options& options, std::ostream& out, std::ostream&) {
  Json json;
  try {
    json = Json::parse(ReadFile(options.in));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  LpSolution solution = SolveLp(CanonicalFromJson(json), options.eps);
  out << Pretty(LpSolutionToJson(solution));
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Formulation toolkit for linear-programming word problems",
               "formgen"};
  app.require_subcommand(1);
  Options options;

  const std::vector<std::string> modes = {"strict", "lenient"};

  auto* augment = app.add_subcommand(
      "augment", "Write <augmented text>\\t<target IR> rows for training");
  augment->add_option("--in", options.in, "Dataset (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  augment->add_option("--out", options.out, "TSV output (default: stdout)")
      ->check(kWritablePath);
  augment->add_flag("--unmapped-var-spans", options.unmapped_var_spans,
                    "Accept VAR spans that name no mapped variable");

  auto* parse_ir = app.add_subcommand(
      "parse-ir", "Parse one IR string per line into declarations");
  parse_ir->add_option("--in", options.in, "IR strings, one per line")
      ->required()
      ->check(CLI::ExistingFile);
  parse_ir->add_option("--mode", options.mode, "strict or lenient")
      ->check(CLI::IsMember(modes));

  auto* canonicalize = app.add_subcommand(
      "canonicalize", "Print c, A, b of gold or predicted declarations");
  canonicalize->add_option("--in", options.in, "Dataset (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  canonicalize
      ->add_option("--pred", options.pred,
                   "Predicted IR, one line per problem (default: use gold)")
      ->check(CLI::ExistingFile);
  canonicalize->add_option("--mode", options.mode, "IR parse mode")
      ->check(CLI::IsMember(modes));
  canonicalize->add_flag("--algebraic", options.algebraic,
                         "Print the algebraic form as plain text instead");
  canonicalize->add_flag("--unmapped-var-spans", options.unmapped_var_spans,
                         "Accept VAR spans that name no mapped variable");

  auto* score = app.add_subcommand("score", "Declaration-level accuracy");
  score->add_option("--gold", options.gold, "Dataset with gold (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--pred", options.pred, "Predicted IR, one line per problem")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--tol", options.tol, "Canonical equality tolerance")
      ->check(CLI::NonNegativeNumber);
  score->add_option("--mode", options.mode, "IR parse mode")
      ->check(CLI::IsMember(modes));
  score->add_flag("--unmapped-var-spans", options.unmapped_var_spans,
                  "Accept VAR spans that name no mapped variable");

  auto* noise = app.add_subcommand("noise", "Corrupt a fraction of entity spans");
  noise->add_option("--p", options.p, "Fraction of spans to corrupt")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  noise->add_option("--seed", options.seed, "Random seed");
  noise->add_option("--shift-max", options.shift_max,
                    "Largest boundary shift in characters")
      ->check(CLI::PositiveNumber);
  noise->add_option("--in", options.in, "Dataset (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  noise->add_option("--out", options.out, "Noisy dataset (JSONL)")
      ->required()
      ->check(kWritablePath);
  noise->add_option("--report", options.report, "Report (JSON)")
      ->check(kWritablePath);
  noise->add_flag("--unmapped-var-spans", options.unmapped_var_spans,
                  "Accept VAR spans that name no mapped variable");

  auto* ner_f1 = app.add_subcommand("ner-f1", "Micro-averaged span F1");
  ner_f1->add_option("--ref", options.ref, "Reference dataset (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  ner_f1->add_option("--hyp", options.hyp, "Hypothesis dataset (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  ner_f1->add_flag("--unmapped-var-spans", options.unmapped_var_spans,
                   "Accept VAR spans that name no mapped variable in --ref");

  auto* solve = app.add_subcommand("solve", "Solve a canonical formulation");
  solve->add_option("--in", options.in, "Canonical formulation (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  solve->add_option("--eps", options.eps, "Feasibility tolerance")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const CLI::App* failing = &app;
    for (const CLI::App* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (augment->parsed()) RunAugment(options, out, err);
    if (parse_ir->parsed()) RunParseIr(options, out, err);
    if (canonicalize->parsed()) RunCanonicalize(options, out, err);
    if (score->parsed()) RunScore(options, out, err);
    if (noise->parsed()) RunNoise(options, out, err);
    if (ner_f1->parsed()) RunNerF1(options, out, err);
    if (solve->parsed()) RunSolve(options, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace formgen::cli
