#ifndef FORMGEN_METRICS_H_
#define FORMGEN_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "formgen/canonical.h"
#include "formgen/declaration.h"
#include "formgen/entity.h"
#include "formgen/order_mapping.h"

namespace formgen {

struct GoldExample {
  std::string id;
  std::vector<Declaration> declarations;
  OrderMapping mapping;
};

struct PredictedExample {
  std::string id;
  std::vector<Declaration> declarations;
};

struct ExampleScore {
  std::string id;
  std::size_t declarations = 0;     // D_i, ground-truth declarations
  std::size_t false_positives = 0;  // FP_i, unmatched predictions
  std::size_t false_negatives = 0;  // FN_i, unmatched ground truth

  friend bool operator==(const ExampleScore&, const ExampleScore&) = default;
};

struct ScoreReport {
  std::vector<ExampleScore> per_example;  // in gold order
  std::size_t examples = 0;               // N
  std::size_t total_declarations = 0;
  std::size_t total_false_positives = 0;
  std::size_t total_false_negatives = 0;
  // 1 - (sum FP + FN) / (sum D). Unbounded below: a prediction with many
  // spurious declarations can drive it negative.
  double accuracy = 1.0;
};

// Declaration-level accuracy. Per example, predictions are matched one to one
// with gold declarations under DeclarationsEqual (maximum bipartite
// matching). A prediction that cannot be canonicalized (unknown variable,
// unrecognized objective direction) matches nothing. Gold examples without a
// prediction entry count as empty predictions.
//
// Throws ValidationError for a predicted id missing from gold or for duplicate
// ids, and StructureError when the corpus has no gold declarations but does
// have predictions (the ratio is undefined).
ScoreReport ScoreAccuracy(std::span<const GoldExample> gold,
                          std::span<const PredictedExample> predicted,
                          const Decimal& tolerance = DefaultEqualityTolerance());

// Size of a maximum matching in the bipartite graph whose left vertex i is
// adjacent to right vertex j iff adjacent[i][j].
std::size_t MaximumMatchingSize(const std::vector<std::vector<bool>>& adjacent);

struct SpanDocument {
  std::string id;
  std::vector<EntitySpan> spans;
};

struct F1Report {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
};

// Precision, recall and F1 from pooled counts. Both sides empty gives 1 for
// all three; any other zero denominator gives 0.
F1Report F1FromCounts(std::size_t true_positives, std::size_t false_positives,
                      std::size_t false_negatives);

// Micro-averaged span F1: a hypothesis span is a true positive iff the
// reference document with the same id holds a span with identical start, end
// and label (multiset semantics). Both sides must carry the same set of ids;
// throws ValidationError otherwise.
F1Report MicroF1(std::span<const SpanDocument> reference,
                 std::span<const SpanDocument> hypothesis);

}  // namespace formgen

#endif  // FORMGEN_METRICS_H_
