#include "formgen/noise.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "formgen/error.h"
#include "formgen/utf8.h"

namespace formgen {
namespace {

constexpr int kShiftAttempts = 32;

std::vector<SpanDocument> Documents(std::span<const Problem> problems) {
  std::vector<SpanDocument> out;
  out.reserve(problems.size());
  for (const Problem& problem : problems) {
    out.push_back({problem.id, problem.spans});
  }
  return out;
}

EntityLabel OtherLabel(EntityLabel label, SeededRandom& random) {
  std::vector<EntityLabel> others;
  for (EntityLabel candidate : kAllEntityLabels) {
    if (candidate != label) others.push_back(candidate);
  }
  return others[random.Below(others.size())];
}

std::optional<EntitySpan> Shift(const EntitySpan& span,
                                const std::vector<EntitySpan>& others,
                                std::size_t text_length,
                                std::size_t shift_max, SeededRandom& random) {
  const auto delta = [&]() {
    const long amount = 1 + static_cast<long>(random.Below(shift_max));
    return random.Below(2) == 0 ? -amount : amount;
  };
  for (int attempt = 0; attempt < kShiftAttempts; ++attempt) {
    // 0: start only, 1: end only, 2: both.
    const std::uint64_t mode = random.Below(3);
    const long start_delta = mode == 1 ? 0 : delta();
    const long end_delta = mode == 0 ? 0 : delta();
    const long start = static_cast<long>(span.start) + start_delta;
    const long end = static_cast<long>(span.end) + end_delta;
    if (start < 0 || start >= end || end > static_cast<long>(text_length)) {
      continue;
    }
    EntitySpan moved{static_cast<std::size_t>(start),
                     static_cast<std::size_t>(end), span.label};
    if (moved == span) continue;
    bool clash = std::any_of(others.begin(), others.end(),
                             [&](const EntitySpan& other) {
                               return other.Overlaps(moved);
                             });
    if (!clash) return moved;
  }
  return std::nullopt;
}

}  // namespace

std::string_view CorruptionKindName(CorruptionKind kind) {
  switch (kind) {
    case CorruptionKind::kDrop:
      return "drop";
    case CorruptionKind::kMislabel:
      return "mislabel";
    case CorruptionKind::kShift:
      return "shift";
  }
  return "";
}

std::uint64_t SeededRandom::Below(std::uint64_t bound) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t value;
  do {
    value = engine_();
  } while (value > limit);
  return value % bound;
}

NoiseResult CorruptSpans(std::span<const Problem> problems,
                         const NoiseConfig& config) {
  if (!(config.p >= 0.0 && config.p <= 1.0)) {
    throw ValidationError("must lie in [0, 1]", "p");
  }
  if (config.shift_max == 0) {
    throw ValidationError("must be positive", "shift_max");
  }

  std::size_t total = 0;
  for (const Problem& problem : problems) total += problem.spans.size();
  const std::size_t selected = std::min<std::size_t>(
      total, static_cast<std::size_t>(
                 std::llround(config.p * static_cast<double>(total))));

  SeededRandom random(config.seed);
  std::vector<std::size_t> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = i;
  for (std::size_t i = 0; i < selected; ++i) {
    std::swap(order[i], order[i + random.Below(total - i)]);
  }
  const std::size_t base = selected / 3;
  const std::size_t drops = base + (selected % 3 > 0 ? 1 : 0);
  const std::size_t mislabels = base + (selected % 3 > 1 ? 1 : 0);
  std::vector<std::optional<CorruptionKind>> plan(total);
  for (std::size_t i = 0; i < selected; ++i) {
    plan[order[i]] = i < drops               ? CorruptionKind::kDrop
                     : i < drops + mislabels ? CorruptionKind::kMislabel
                                             : CorruptionKind::kShift;
  }

  NoiseResult result;
  result.noisy.reserve(problems.size());
  std::size_t global = 0;
  for (std::size_t p = 0; p < problems.size(); ++p) {
    const Problem& problem = problems[p];
    Problem noisy = problem;
    noisy.spans.clear();
    std::vector<std::size_t> pending_shifts;  // indices into problem.spans

    for (std::size_t i = 0; i < problem.spans.size(); ++i, ++global) {
      const EntitySpan& span = problem.spans[i];
      if (!plan[global]) {
        noisy.spans.push_back(span);
        continue;
      }
      switch (*plan[global]) {
        case CorruptionKind::kDrop:
          result.corruptions.push_back({p, span, CorruptionKind::kDrop, {}});
          break;
        case CorruptionKind::kMislabel: {
          EntitySpan relabeled = span;
          relabeled.label = OtherLabel(span.label, random);
          noisy.spans.push_back(relabeled);
          result.corruptions.push_back(
              {p, span, CorruptionKind::kMislabel, relabeled});
          break;
        }
        case CorruptionKind::kShift:
          noisy.spans.push_back(span);
          pending_shifts.push_back(i);
          break;
      }
    }

    if (!pending_shifts.empty()) {
      const std::size_t length =
          utf8::CodePointCount(problem.text).value_or(0);
      for (std::size_t index : pending_shifts) {
        const EntitySpan& span = problem.spans[index];
        auto slot = std::find(noisy.spans.begin(), noisy.spans.end(), span);
        std::vector<EntitySpan> others;
        others.reserve(noisy.spans.size());
        for (auto it = noisy.spans.begin(); it != noisy.spans.end(); ++it) {
          if (it != slot) others.push_back(*it);
        }
        auto moved = Shift(span, others, length, config.shift_max, random);
        if (moved) {
          *slot = *moved;
        } else {
          noisy.spans.erase(slot);
          result.diagnostics.push_back(
              "problem '" + problem.id + "': no legal shift for span " +
              DescribeSpan(span) + "; dropped instead");
        }
        result.corruptions.push_back(
            {p, span, CorruptionKind::kShift, moved});
      }
      std::sort(noisy.spans.begin(), noisy.spans.end());
    }
    result.noisy.push_back(std::move(noisy));
  }

  result.report = MicroF1(Documents(problems), Documents(result.noisy));
  return result;
}

}  // namespace formgen
