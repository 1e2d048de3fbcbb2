#include "formgen/metrics.h"

#include <map>
#include <optional>

#include "formgen/error.h"

namespace formgen {
namespace {

bool TryAugment(std::size_t left,
                const std::vector<std::vector<bool>>& adjacent,
                std::vector<bool>& visited,
                std::vector<std::optional<std::size_t>>& owner) {
  for (std::size_t right = 0; right < owner.size(); ++right) {
    if (!adjacent[left][right] || visited[right]) continue;
    visited[right] = true;
    if (!owner[right] || TryAugment(*owner[right], adjacent, visited, owner)) {
      owner[right] = left;
      return true;
    }
  }
  return false;
}

ExampleScore ScoreExample(const GoldExample& gold,
                          const std::vector<Declaration>& predicted,
                          const Decimal& tolerance) {
  std::vector<CanonicalDeclaration> gold_forms;
  gold_forms.reserve(gold.declarations.size());
  for (const Declaration& declaration : gold.declarations) {
    try {
      gold_forms.push_back(CanonicalizeDeclaration(declaration, gold.mapping));
    } catch (const Error& e) {
      throw ValidationError(std::string("gold declaration: ") + e.what(),
                            "gold", std::nullopt);
    }
  }
  std::vector<std::vector<bool>> adjacent(
      predicted.size(), std::vector<bool>(gold_forms.size(), false));
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    CanonicalDeclaration form;
    try {
      form = CanonicalizeDeclaration(predicted[i], gold.mapping);
    } catch (const MappingError&) {
      continue;
    } catch (const StructureError&) {
      continue;
    }
    for (std::size_t j = 0; j < gold_forms.size(); ++j) {
      adjacent[i][j] = CanonicalEqual(form, gold_forms[j], tolerance);
    }
  }
  const std::size_t matched =
      gold_forms.empty() ? 0 : MaximumMatchingSize(adjacent);
  return {gold.id, gold_forms.size(), predicted.size() - matched,
          gold_forms.size() - matched};
}

}  // namespace

std::size_t MaximumMatchingSize(
    const std::vector<std::vector<bool>>& adjacent) {
  if (adjacent.empty()) return 0;
  std::vector<std::optional<std::size_t>> owner(adjacent.front().size());
  std::size_t matched = 0;
  for (std::size_t left = 0; left < adjacent.size(); ++left) {
    std::vector<bool> visited(owner.size(), false);
    if (TryAugment(left, adjacent, visited, owner)) ++matched;
  }
  return matched;
}

ScoreReport ScoreAccuracy(std::span<const GoldExample> gold,
                          std::span<const PredictedExample> predicted,
                          const Decimal& tolerance) {
  std::map<std::string, const PredictedExample*> by_id;
  for (const PredictedExample& example : predicted) {
    if (!by_id.emplace(example.id, &example).second) {
      throw ValidationError("duplicate prediction id '" + example.id + "'");
    }
  }
  std::map<std::string, bool> gold_ids;
  for (const GoldExample& example : gold) {
    if (!gold_ids.emplace(example.id, true).second) {
      throw ValidationError("duplicate gold id '" + example.id + "'");
    }
  }
  for (const auto& [id, example] : by_id) {
    if (!gold_ids.contains(id)) {
      throw ValidationError("prediction id '" + id + "' has no gold example");
    }
  }

  ScoreReport report;
  report.examples = gold.size();
  static const std::vector<Declaration> kNone;
  for (const GoldExample& example : gold) {
    auto it = by_id.find(example.id);
    const auto& declarations =
        it == by_id.end() ? kNone : it->second->declarations;
    ExampleScore score = ScoreExample(example, declarations, tolerance);
    report.total_declarations += score.declarations;
    report.total_false_positives += score.false_positives;
    report.total_false_negatives += score.false_negatives;
    report.per_example.push_back(std::move(score));
  }
  const std::size_t errors =
      report.total_false_positives + report.total_false_negatives;
  if (report.total_declarations == 0) {
    if (errors != 0) {
      throw StructureError(
          "accuracy is undefined: no gold declarations but " +
          std::to_string(errors) + " predicted declarations");
    }
    report.accuracy = 1.0;
  } else {
    report.accuracy = 1.0 - static_cast<double>(errors) /
                                static_cast<double>(report.total_declarations);
  }
  return report;
}

F1Report F1FromCounts(std::size_t true_positives, std::size_t false_positives,
                      std::size_t false_negatives) {
  F1Report report{true_positives, false_positives, false_negatives, 1.0, 1.0,
                  1.0};
  if (true_positives + false_positives + false_negatives == 0) return report;
  const auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0
                    : static_cast<double>(num) / static_cast<double>(den);
  };
  report.precision = ratio(true_positives, true_positives + false_positives);
  report.recall = ratio(true_positives, true_positives + false_negatives);
  report.f1 = ratio(2 * true_positives,
                    2 * true_positives + false_positives + false_negatives);
  return report;
}

F1Report MicroF1(std::span<const SpanDocument> reference,
                 std::span<const SpanDocument> hypothesis) {
  std::map<std::string, const SpanDocument*> reference_by_id;
  for (const SpanDocument& document : reference) {
    if (!reference_by_id.emplace(document.id, &document).second) {
      throw ValidationError("duplicate reference id '" + document.id + "'");
    }
  }
  if (hypothesis.size() != reference.size()) {
    throw ValidationError("reference has " + std::to_string(reference.size()) +
                          " documents, hypothesis has " +
                          std::to_string(hypothesis.size()));
  }
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::map<std::string, bool> seen;
  for (const SpanDocument& document : hypothesis) {
    auto it = reference_by_id.find(document.id);
    if (it == reference_by_id.end()) {
      throw ValidationError("hypothesis id '" + document.id +
                            "' has no reference document");
    }
    if (!seen.emplace(document.id, true).second) {
      throw ValidationError("duplicate hypothesis id '" + document.id + "'");
    }
    std::map<EntitySpan, long> remaining;
    for (const EntitySpan& span : it->second->spans) ++remaining[span];
    std::size_t matched = 0;
    for (const EntitySpan& span : document.spans) {
      auto found = remaining.find(span);
      if (found != remaining.end() && found->second > 0) {
        --found->second;
        ++matched;
      }
    }
    tp += matched;
    fp += document.spans.size() - matched;
    fn += it->second->spans.size() - matched;
  }
  return F1FromCounts(tp, fp, fn);
}

}  // namespace formgen
