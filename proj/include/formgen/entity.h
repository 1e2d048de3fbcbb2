#ifndef FORMGEN_ENTITY_H_
#define FORMGEN_ENTITY_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace formgen {

enum class EntityLabel { kConstDir, kLimit, kObjDir, kObjName, kParam, kVar };

inline constexpr std::array<EntityLabel, 6> kAllEntityLabels = {
    EntityLabel::kConstDir, EntityLabel::kLimit, EntityLabel::kObjDir,
    EntityLabel::kObjName,  EntityLabel::kParam, EntityLabel::kVar};

// "CONST_DIR", "LIMIT", "OBJ_DIR", "OBJ_NAME", "PARAM", "VAR".
std::string_view LabelName(EntityLabel label);
std::optional<EntityLabel> LabelFromName(std::string_view name);

// Half-open [start, end) range of code points in a problem text.
struct EntitySpan {
  std::size_t start = 0;
  std::size_t end = 0;
  EntityLabel label = EntityLabel::kVar;

  std::size_t length() const { return end - start; }
  bool Overlaps(const EntitySpan& other) const {
    return start < other.end && other.start < end;
  }

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
  friend auto operator<=>(const EntitySpan&, const EntitySpan&) = default;
};

// "(start,end,LABEL)"
std::string DescribeSpan(const EntitySpan& span);

// Checks bounds against a text of `text_length` code points and pairwise
// disjointness. `spans` must be sorted by start. Throws ValidationError whose
// field path is "spans[i]".
void ValidateSpans(const std::vector<EntitySpan>& spans,
                   std::size_t text_length);

}  // namespace formgen

#endif  // FORMGEN_ENTITY_H_
