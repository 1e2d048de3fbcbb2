#ifndef FORMGEN_AUGMENT_H_
#define FORMGEN_AUGMENT_H_

#include <string>
#include <string_view>
#include <vector>

#include "formgen/entity.h"

namespace formgen {

// Wraps every span as "<LABEL> surface </LABEL>" (one space of padding on
// each side); text outside spans is copied unchanged. Spans may come in any
// order but must be in bounds and pairwise disjoint; touching spans are
// allowed. Throws ValidationError otherwise.
//
//   AugmentText("ab", {{0, 1, kVar}}) == "<VAR> a </VAR>b"
std::string AugmentText(std::string_view text,
                        const std::vector<EntitySpan>& spans);

struct StrippedText {
  std::string text;
  std::vector<EntitySpan> spans;
};

// Inverse of AugmentText. Any "<NAME>" or "</NAME>" with NAME made of letters
// and underscores is treated as a tag and must use one of the six entity
// labels; other '<' characters are ordinary text. Exactly one padding space
// is removed inside each tag when present. Throws ParseError on unknown
// labels, nested tags, unbalanced tags and empty spans.
StrippedText StripTags(std::string_view augmented);

}  // namespace formgen

#endif  // FORMGEN_AUGMENT_H_
