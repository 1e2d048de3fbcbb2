#ifndef FORMGEN_NOISE_H_
#define FORMGEN_NOISE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "formgen/dataset.h"
#include "formgen/entity.h"
#include "formgen/metrics.h"

namespace formgen {

struct NoiseConfig {
  double p = 0.0;             // fraction of spans corrupted, in [0, 1]
  std::uint64_t seed = 0;
  std::size_t shift_max = 3;  // max characters a boundary moves, >= 1
};

enum class CorruptionKind { kDrop, kMislabel, kShift };

std::string_view CorruptionKindName(CorruptionKind kind);

struct Corruption {
  std::size_t problem = 0;  // index into the input corpus
  EntitySpan original;
  CorruptionKind kind = CorruptionKind::kDrop;
  // Replacement span; empty when the span was dropped, including a shift
  // that found no legal position and fell back to a drop.
  std::optional<EntitySpan> replacement;
};

struct NoiseResult {
  std::vector<Problem> noisy;
  F1Report report;  // MicroF1(original spans, noisy spans)
  std::vector<Corruption> corruptions;
  std::vector<std::string> diagnostics;
};

// Corrupts round(p * total spans) spans chosen uniformly over the corpus. The
// chosen spans are split into three groups whose sizes differ by at most one
// (extra spans go to drop, then mislabel): drop removes the span, mislabel
// swaps the label for one of the other five uniformly, and shift moves start
// and/or end by 1..shift_max characters to a new non-empty, in-bounds
// position overlapping no other span. A shift with no legal position after
// a bounded number of draws becomes a drop and is reported in diagnostics.
//
// Output is a pure function of (problems, config), identical on every
// platform: draws come from mt19937_64 with in-house range reduction rather
// than the implementation-defined standard distributions.
//
// Throws ValidationError for p outside [0, 1] or shift_max == 0.
NoiseResult CorruptSpans(std::span<const Problem> problems,
                         const NoiseConfig& config);

// Portable uniform draws on top of mt19937_64.
class SeededRandom {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t Below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace formgen

#endif  // FORMGEN_NOISE_H_
