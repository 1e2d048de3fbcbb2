#include <cmath>

#include "doctest.h"
#include "formgen/canonical.h"
#include "formgen/error.h"
#include "formgen/lp_solve.h"
#include "testing/fixtures.h"
#include "testing/generators.h"
#include "testing/oracles.h"

namespace formgen {
namespace {

double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

bool Feasible(const DenseLp& lp, const std::vector<double>& x, double eps) {
  for (double v : x) {
    if (v < -eps) return false;
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (Dot(lp.constraints[i], x) > lp.limits[i] + eps) return false;
  }
  return true;
}

TEST_CASE("berry picker optimum") {
  const CanonicalFormulation formulation = Canonicalize(
      testing::BerryPickerGold(), testing::BerryPickerMapping());
  const LpSolution solution = SolveLp(formulation);
  REQUIRE(solution.status == LpStatus::kOptimal);
  CHECK(solution.objective_value == doctest::Approx(600.0 / 11.0).epsilon(1e-12));
  CHECK(std::abs(solution.objective_value - 600.0 / 11.0) <= 1e-6);
  REQUIRE(solution.x.size() == 2);
  CHECK(solution.x[0] == doctest::Approx(450.0 / 11.0));
  CHECK(solution.x[1] == doctest::Approx(150.0 / 11.0));
}

TEST_CASE("berry picker agrees with the oracle on the original >= rows") {
  // The oracle sees the problem as stated, not the negated canonical rows.
  const std::vector<testing::LinearRow> rows = {{{50, 70}, true, 3000},
                                                {{300, 200}, true, 15000}};
  const auto oracle = testing::VertexEnumerationMinimum({1, 1}, rows);
  REQUIRE(oracle);
  const LpSolution solution = SolveLp(Canonicalize(
      testing::BerryPickerGold(), testing::BerryPickerMapping()));
  CHECK(std::abs(solution.objective_value - oracle->objective) <= 1e-6);
}

TEST_CASE("trivial and degenerate shapes") {
  SUBCASE("no constraints, nonnegative cost") {
    const LpSolution s = SolveLp(DenseLp{{1}, {}, {}});
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.x == std::vector<double>{0});
    CHECK(s.objective_value == 0);
  }
  SUBCASE("no constraints, negative cost") {
    CHECK(SolveLp(DenseLp{{-1}, {}, {}}).status == LpStatus::kUnbounded);
  }
  SUBCASE("infeasible") {
    // x <= -1 with x >= 0.
    CHECK(SolveLp(DenseLp{{1}, {{1}}, {-1}}).status == LpStatus::kInfeasible);
  }
  SUBCASE("equality through a pair of rows") {
    const LpSolution s = SolveLp(DenseLp{{-1, -2}, {{1, 1}, {-1, -1}}, {4, -4}});
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.objective_value == doctest::Approx(-8));
  }
  SUBCASE("degenerate vertex") {
    const LpSolution s = SolveLp(
        DenseLp{{-1, -1}, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {1, 1, 2, 0}});
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.objective_value == doctest::Approx(-2));
  }
}

TEST_CASE("dimension mismatches are structural errors") {
  CHECK_THROWS_AS(SolveLp(DenseLp{{1, 1}, {{1}}, {1}}), StructureError);
  CHECK_THROWS_AS(SolveLp(DenseLp{{1}, {{1}}, {}}), StructureError);
  CHECK_THROWS_AS(SolveLp(DenseLp{{NAN}, {}, {}}), StructureError);
}

TEST_CASE("random bounded problems agree with vertex enumeration") {
  testing::Rng rng(2718);
  int optimal = 0;
  int infeasible = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.Int(1, 4));
    const std::size_t m = static_cast<std::size_t>(rng.Int(1, 5));
    const DenseLp lp = testing::RandomBoundedLp(rng, n, m);
    const LpSolution solution = SolveLp(lp);
    const auto oracle =
        testing::VertexEnumerationMinimum(lp.objective, testing::RowsOf(lp));
    // The bounding row rules out unboundedness.
    REQUIRE(solution.status != LpStatus::kUnbounded);
    CHECK((solution.status == LpStatus::kOptimal) == oracle.has_value());
    if (solution.status == LpStatus::kOptimal && oracle) {
      ++optimal;
      CHECK(std::abs(solution.objective_value - oracle->objective) <= 1e-6);
      CHECK(Feasible(lp, solution.x, 1e-7));
      CHECK(std::abs(Dot(lp.objective, solution.x) - solution.objective_value) <= 1e-9);
      // No sampled feasible point beats the optimum.
      for (int k = 0; k < 50; ++k) {
        std::vector<double> point(n);
        for (double& v : point) v = rng.Real(0, 20.0 / static_cast<double>(n));
        if (Feasible(lp, point, 0)) {
          CHECK(Dot(lp.objective, point) >= solution.objective_value - 1e-9);
        }
      }
    } else {
      ++infeasible;
    }
  }
  // Both outcomes must actually be exercised.
  CHECK(optimal > 100);
  CHECK(infeasible > 5);
}

TEST_CASE("scaling the objective scales the optimum") {
  testing::Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    DenseLp lp = testing::RandomBoundedLp(rng, 3, 3);
    const LpSolution base = SolveLp(lp);
    if (base.status != LpStatus::kOptimal) continue;
    for (double& c : lp.objective) c *= 2.5;
    const LpSolution scaled = SolveLp(lp);
    REQUIRE(scaled.status == LpStatus::kOptimal);
    CHECK(scaled.objective_value ==
          doctest::Approx(2.5 * base.objective_value).epsilon(1e-9));
  }
}

}  // namespace
}  // namespace formgen
