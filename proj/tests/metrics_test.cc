#include <algorithm>

#include "doctest.h"
#include "formgen/error.h"
#include "formgen/metrics.h"
#include "testing/fixtures.h"
#include "testing/generators.h"
#include "testing/oracles.h"

namespace formgen {
namespace {

GoldExample BerryGold(const std::string& id = "berry") {
  return {id, testing::BerryPickerGold(), testing::BerryPickerMapping()};
}

Declaration WithLimit(const Declaration& d, long limit) {
  Constraint c = std::get<Constraint>(d);
  c.limit = Decimal(limit);
  return c;
}

TEST_CASE("perfect predictions score 1") {
  std::vector<GoldExample> gold = {BerryGold("a"), BerryGold("b")};
  std::vector<PredictedExample> predicted = {
      {"a", testing::BerryPickerGold()}, {"b", testing::BerryPickerGold()}};
  const ScoreReport report = ScoreAccuracy(gold, predicted);
  CHECK(report.accuracy == 1.0);
  CHECK(report.examples == 2);
  CHECK(report.total_declarations == 6);
  CHECK(report.total_false_positives == 0);
  CHECK(report.total_false_negatives == 0);
}

TEST_CASE("one wrong limit costs one FP and one FN") {
  const auto g = testing::BerryPickerGold();
  std::vector<GoldExample> gold = {BerryGold()};
  std::vector<PredictedExample> predicted = {
      {"berry", {g[0], g[1], WithLimit(g[2], 15001)}}};
  const ScoreReport report = ScoreAccuracy(gold, predicted);
  REQUIRE(report.per_example.size() == 1);
  CHECK(report.per_example[0] == ExampleScore{"berry", 3, 1, 1});
  CHECK(report.accuracy == doctest::Approx(1.0 - 2.0 / 3.0));
  CHECK(report.accuracy == doctest::Approx(0.3333).epsilon(1e-4));
}

TEST_CASE("accuracy goes negative with many spurious predictions") {
  const auto g = testing::BerryPickerGold();
  std::vector<GoldExample> gold = {
      {"e", {g[1], g[2]}, testing::BerryPickerMapping()}};
  std::vector<Declaration> wrong;
  for (long limit = 1; limit <= 5; ++limit) wrong.push_back(WithLimit(g[1], limit));
  std::vector<PredictedExample> predicted = {{"e", wrong}};
  const ScoreReport report = ScoreAccuracy(gold, predicted);
  CHECK(report.per_example[0] == ExampleScore{"e", 2, 5, 2});
  CHECK(report.accuracy == -2.5);
}

TEST_CASE("missing predictions count as empty") {
  std::vector<GoldExample> gold = {BerryGold()};
  const ScoreReport report = ScoreAccuracy(gold, {});
  CHECK(report.per_example[0] == ExampleScore{"berry", 3, 0, 3});
  CHECK(report.accuracy == 0.0);
}

TEST_CASE("id errors") {
  std::vector<GoldExample> gold = {BerryGold()};
  std::vector<PredictedExample> stray = {{"other", {}}};
  CHECK_THROWS_AS(ScoreAccuracy(gold, stray), ValidationError);
  std::vector<GoldExample> doubled = {BerryGold(), BerryGold()};
  CHECK_THROWS_AS(ScoreAccuracy(doubled, {}), ValidationError);
}

TEST_CASE("empty corpus") {
  CHECK(ScoreAccuracy({}, {}).accuracy == 1.0);
  std::vector<GoldExample> gold = {{"e", {}, testing::BerryPickerMapping()}};
  std::vector<PredictedExample> predicted = {{"e", {testing::BerryPickerGold()[0]}}};
  CHECK_THROWS_AS(ScoreAccuracy(gold, predicted), StructureError);
}

TEST_CASE("unresolvable predictions are unmatched, not fatal") {
  const auto g = testing::BerryPickerGold();
  Constraint hallucinated = std::get<Constraint>(g[1]);
  hallucinated.terms.push_back({"farm 9", Decimal(3)});
  Objective vague = std::get<Objective>(g[0]);
  vague.direction = "optimize";
  std::vector<GoldExample> gold = {BerryGold()};
  std::vector<PredictedExample> predicted = {
      {"berry", {vague, hallucinated, g[2]}}};
  const ScoreReport report = ScoreAccuracy(gold, predicted);
  CHECK(report.per_example[0] == ExampleScore{"berry", 3, 2, 2});
}

TEST_CASE("duplicates are matched with multiplicity") {
  const auto g = testing::BerryPickerGold();
  std::vector<GoldExample> gold = {{"d", {g[1], g[1]}, testing::BerryPickerMapping()}};
  std::vector<PredictedExample> predicted = {{"d", {g[1], g[1], g[1]}}};
  CHECK(ScoreAccuracy(gold, predicted).per_example[0] ==
        ExampleScore{"d", 2, 1, 0});
}

TEST_CASE("maximum matching size") {
  CHECK(MaximumMatchingSize({}) == 0);
  // Greedy left-to-right would match 0-0 and then fail on 1.
  CHECK(MaximumMatchingSize({{true, true}, {true, false}}) == 2);
  CHECK(MaximumMatchingSize({{false, false}, {false, false}}) == 0);
}

// Declarations over two variables drawn from a small value set, so random
// pairs are often canonically equal.
Declaration SmallDeclaration(testing::Rng& rng) {
  const std::vector<std::string> names = {"u", "v"};
  if (rng.Chance(0.15)) {
    return Objective{rng.Chance(0.5) ? "minimize" : "maximize", "obj",
                     {{"u", Decimal(rng.Int(-1, 1))}, {"v", Decimal(1)}}};
  }
  Constraint c{"dir", rng.Chance(0.5) ? Operator::kLessOrEqual : Operator::kGreaterOrEqual,
               Decimal(rng.Int(0, 1)),
               {{"u", Decimal(rng.Int(1, 2))}}};
  if (rng.Chance(0.5)) c.terms.push_back({"v", Decimal(rng.Int(-1, 1))});
  if (rng.Chance(0.05)) c.terms.push_back({"w", Decimal(1)});  // unresolvable
  return c;
}

TEST_CASE("score equals the brute-force matching oracle") {
  testing::Rng rng(41);
  const OrderMapping mapping({{"u", 0}, {"v", 1}});
  for (int instance = 0; instance < 500; ++instance) {
    std::vector<GoldExample> gold;
    std::vector<PredictedExample> predicted;
    std::size_t expected_errors = 0;
    std::size_t expected_d = 0;
    const long examples = rng.Int(1, 3);
    for (long e = 0; e < examples; ++e) {
      std::vector<Declaration> g;
      std::vector<Declaration> p;
      const long g_count = rng.Int(1, 6);
      const long p_count = rng.Int(0, 6);
      for (long k = 0; k < g_count; ++k) {
        Declaration d = SmallDeclaration(rng);
        while (TermsOf(d).back().variable == "w") d = SmallDeclaration(rng);
        g.push_back(d);
      }
      for (long k = 0; k < p_count; ++k) p.push_back(SmallDeclaration(rng));
      const auto equal = [&](std::size_t i, std::size_t j) {
        try {
          return DeclarationsEqual(p[i], g[j], mapping);
        } catch (const MappingError&) {
          return false;
        }
      };
      const std::size_t matched = testing::BruteForceMatching(p.size(), g.size(), equal);
      expected_errors += (p.size() - matched) + (g.size() - matched);
      expected_d += g.size();
      const std::string id = "ex" + std::to_string(e);
      gold.push_back({id, g, mapping});
      predicted.push_back({id, p});
    }
    const ScoreReport report = ScoreAccuracy(gold, predicted);
    CHECK(report.total_false_positives + report.total_false_negatives ==
          expected_errors);
    CHECK(report.total_declarations == expected_d);
    CHECK(report.accuracy == 1.0 - static_cast<double>(expected_errors) /
                                       static_cast<double>(expected_d));

    // Permuting examples and declarations within them changes nothing.
    std::shuffle(gold.begin(), gold.end(), rng.engine());
    std::shuffle(predicted.begin(), predicted.end(), rng.engine());
    for (auto& p : predicted) {
      std::shuffle(p.declarations.begin(), p.declarations.end(), rng.engine());
    }
    for (auto& g : gold) {
      std::shuffle(g.declarations.begin(), g.declarations.end(), rng.engine());
    }
    const ScoreReport permuted = ScoreAccuracy(gold, predicted);
    CHECK(permuted.accuracy == report.accuracy);
    CHECK(permuted.total_false_positives == report.total_false_positives);
    CHECK(permuted.total_false_negatives == report.total_false_negatives);
  }
}

std::vector<SpanDocument> Docs(std::vector<EntitySpan> spans) {
  return {{"doc", std::move(spans)}};
}

TEST_CASE("identical labelings give F1 of one") {
  const auto spans = testing::BerryPickerSpans();
  const F1Report report = MicroF1(Docs(spans), Docs(spans));
  CHECK(report.f1 == 1.0);
  CHECK(report.true_positives == spans.size());
}

TEST_CASE("one mislabeled span out of four") {
  using L = EntityLabel;
  std::vector<EntitySpan> reference = {
      {0, 2, L::kVar}, {3, 5, L::kParam}, {6, 8, L::kLimit}, {9, 12, L::kObjDir}};
  std::vector<EntitySpan> hypothesis = reference;
  hypothesis[3].label = L::kObjName;
  const F1Report report = MicroF1(Docs(reference), Docs(hypothesis));
  CHECK(report.true_positives == 3);
  CHECK(report.false_positives == 1);
  CHECK(report.false_negatives == 1);
  CHECK(report.precision == 0.75);
  CHECK(report.recall == 0.75);
  CHECK(report.f1 == 0.75);
}

TEST_CASE("empty hypothesis scores zero, both empty scores one") {
  const F1Report miss = MicroF1(Docs(testing::BerryPickerSpans()), Docs({}));
  CHECK(miss.f1 == 0.0);
  CHECK(miss.recall == 0.0);
  const F1Report nothing = MicroF1(Docs({}), Docs({}));
  CHECK(nothing.f1 == 1.0);
  CHECK(nothing.precision == 1.0);
  CHECK(nothing.recall == 1.0);
}

TEST_CASE("mismatched document ids are rejected") {
  std::vector<SpanDocument> a = {{"x", {}}};
  std::vector<SpanDocument> b = {{"y", {}}};
  CHECK_THROWS_AS(MicroF1(a, b), ValidationError);
  CHECK_THROWS_AS(MicroF1(a, {}), ValidationError);
}

TEST_CASE("counts pool across documents before dividing") {
  using L = EntityLabel;
  std::vector<SpanDocument> reference = {
      {"a", {{0, 1, L::kVar}}},
      {"b", {{0, 1, L::kVar}, {2, 3, L::kVar}, {4, 5, L::kVar}}}};
  std::vector<SpanDocument> hypothesis = {
      {"b", {{0, 1, L::kVar}, {2, 3, L::kVar}, {4, 5, L::kVar}}},
      {"a", {{0, 2, L::kVar}}}};
  const F1Report report = MicroF1(reference, hypothesis);
  CHECK(report.true_positives == 3);
  CHECK(report.f1 == doctest::Approx(6.0 / 8.0));
}

TEST_CASE("swapping sides swaps precision and recall") {
  testing::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    std::vector<SpanDocument> a;
    std::vector<SpanDocument> b;
    for (int d = 0; d < 3; ++d) {
      std::vector<EntitySpan> x;
      std::vector<EntitySpan> y;
      for (std::size_t s = 0; s < 8; ++s) {
        EntitySpan span{s * 4, s * 4 + 2, kAllEntityLabels[static_cast<std::size_t>(rng.Int(0, 5))]};
        if (rng.Chance(0.7)) x.push_back(span);
        if (rng.Chance(0.3)) span.label = kAllEntityLabels[static_cast<std::size_t>(rng.Int(0, 5))];
        if (rng.Chance(0.7)) y.push_back(span);
      }
      a.push_back({"d" + std::to_string(d), x});
      b.push_back({"d" + std::to_string(d), y});
    }
    const F1Report forward = MicroF1(a, b);
    const F1Report backward = MicroF1(b, a);
    CHECK(forward.precision == backward.recall);
    CHECK(forward.recall == backward.precision);
    CHECK(forward.f1 == backward.f1);
  }
}

}  // namespace
}  // namespace formgen
