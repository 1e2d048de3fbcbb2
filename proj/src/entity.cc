#include "formgen/entity.h"

#include "formgen/error.h"

namespace formgen {

std::string_view LabelName(EntityLabel label) {
  switch (label) {
    case EntityLabel::kConstDir:
      return "CONST_DIR";
    case EntityLabel::kLimit:
      return "LIMIT";
    case EntityLabel::kObjDir:
      return "OBJ_DIR";
    case EntityLabel::kObjName:
      return "OBJ_NAME";
    case EntityLabel::kParam:
      return "PARAM";
    case EntityLabel::kVar:
      return "VAR";
  }
  return "";
}

std::optional<EntityLabel> LabelFromName(std::string_view name) {
  for (EntityLabel label : kAllEntityLabels) {
    if (LabelName(label) == name) return label;
  }
  return std::nullopt;
}

std::string DescribeSpan(const EntitySpan& span) {
  return "(" + std::to_string(span.start) + "," + std::to_string(span.end) +
         "," + std::string(LabelName(span.label)) + ")";
}

void ValidateSpans(const std::vector<EntitySpan>& spans,
                   std::size_t text_length) {
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const EntitySpan& span = spans[i];
    const std::string path = "spans[" + std::to_string(i) + "]";
    if (span.start >= span.end) {
      throw ValidationError("empty or inverted span " + DescribeSpan(span),
                            path);
    }
    if (span.end > text_length) {
      throw ValidationError("span " + DescribeSpan(span) +
                                " exceeds text length " +
                                std::to_string(text_length),
                            path);
    }
    if (i > 0 && spans[i - 1].Overlaps(span)) {
      throw ValidationError("span " + DescribeSpan(spans[i - 1]) +
                                " overlaps span " + DescribeSpan(span),
                            path);
    }
  }
}

}  // namespace formgen
