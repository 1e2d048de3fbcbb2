#ifndef FORMGEN_TESTING_FIXTURES_H_
#define FORMGEN_TESTING_FIXTURES_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "formgen/dataset.h"

namespace formgen::testing {

// The berry-picker problem: two farms, minimize hours, two >= constraints.
std::string BerryPickerText();
std::vector<EntitySpan> BerryPickerSpans();
OrderMapping BerryPickerMapping();  // farm 1 -> 0, farm 2 -> 1
std::vector<Declaration> BerryPickerGold();
Problem BerryPickerProblem();
// The problem as one JSONL record.
std::string BerryPickerJsonLine();

// Spans for each (surface, label) pair, located left to right in `text`.
// ASCII only.
std::vector<EntitySpan> LocateSpans(
    std::string_view text,
    const std::vector<std::pair<std::string_view, EntityLabel>>& mentions);

}  // namespace formgen::testing

#endif  // FORMGEN_TESTING_FIXTURES_H_
