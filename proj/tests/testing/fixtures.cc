#include "testing/fixtures.h"

#include <stdexcept>

namespace formgen::testing {

std::string BerryPickerText() {
  return "A berry picker must pick at least 3000 strawberries and 15000 "
         "raspberries. He visits two farms. For each hour at farm 1 he spends, "
         "he can pick 50 strawberries and 300 raspberries. For each hour at "
         "farm 2 he spends, he can catch 70 strawberries and 200 raspberries. "
         "How many hours should he spend at each farm to minimize the amount "
         "of time he spends at both farms?";
}

std::vector<EntitySpan> LocateSpans(
    std::string_view text,
    const std::vector<std::pair<std::string_view, EntityLabel>>& mentions) {
  std::vector<EntitySpan> spans;
  std::size_t cursor = 0;
  for (const auto& [surface, label] : mentions) {
    std::size_t at = text.find(surface, cursor);
    if (at == std::string_view::npos) {
      throw std::logic_error("mention not found: " + std::string(surface));
    }
    spans.push_back({at, at + surface.size(), label});
    cursor = at + surface.size();
  }
  return spans;
}

std::vector<EntitySpan> BerryPickerSpans() {
  using L = EntityLabel;
  return LocateSpans(BerryPickerText(), {{"at least", L::kConstDir},
                                         {"3000", L::kLimit},
                                         {"15000", L::kLimit},
                                         {"hour", L::kObjName},
                                         {"farm 1", L::kVar},
                                         {"50", L::kParam},
                                         {"300", L::kParam},
                                         {"hour", L::kObjName},
                                         {"farm 2", L::kVar},
                                         {"70", L::kParam},
                                         {"200", L::kParam},
                                         {"hours", L::kObjName},
                                         {"minimize", L::kObjDir},
                                         {"amount of time", L::kObjName}});
}

OrderMapping BerryPickerMapping() {
  return OrderMapping({{"farm 1", 0}, {"farm 2", 1}});
}

std::vector<Declaration> BerryPickerGold() {
  return {
      Objective{"minimize",
                "amount of time",
                {{"farm 2", Decimal(1)}, {"farm 1", Decimal(1)}}},
      Constraint{"at least",
                 Operator::kGreaterOrEqual,
                 Decimal(3000),
                 {{"farm 2", Decimal(70)}, {"farm 1", Decimal(50)}}},
      Constraint{"at least",
                 Operator::kGreaterOrEqual,
                 Decimal(15000),
                 {{"farm 1", Decimal(300)}, {"farm 2", Decimal(200)}}},
  };
}

Problem BerryPickerProblem() {
  return {"berry-picker", BerryPickerText(), BerryPickerSpans(),
          BerryPickerMapping(), BerryPickerGold()};
}

std::string BerryPickerJsonLine() {
  return ProblemToJson(BerryPickerProblem()).dump();
}

}  // namespace formgen::testing
