#include "formgen/augment.h"

#include <algorithm>
#include <optional>

#include "formgen/error.h"
#include "formgen/utf8.h"

namespace formgen {
namespace {

struct Tag {
  std::string_view name;
  bool closing = false;
  std::size_t size = 0;  // bytes including brackets
};

bool IsTagChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

// Tag starting at text[i] == '<', if any.
std::optional<Tag> TagAt(std::string_view text, std::size_t i) {
  std::size_t j = i + 1;
  bool closing = j < text.size() && text[j] == '/';
  if (closing) ++j;
  std::size_t name_begin = j;
  while (j < text.size() && IsTagChar(text[j])) ++j;
  if (j == name_begin || j >= text.size() || text[j] != '>') {
    return std::nullopt;
  }
  return Tag{text.substr(name_begin, j - name_begin), closing, j + 1 - i};
}

}  // namespace

std::string AugmentText(std::string_view text,
                        const std::vector<EntitySpan>& spans) {
  auto offsets = utf8::CodePointOffsets(text);
  if (!offsets) throw ValidationError("text is not valid UTF-8", "text");
  std::vector<EntitySpan> sorted = spans;
  std::sort(sorted.begin(), sorted.end());
  ValidateSpans(sorted, offsets->size() - 1);

  std::string out;
  out.reserve(text.size() + sorted.size() * 24);
  std::size_t cursor = 0;  // byte offset
  for (const EntitySpan& span : sorted) {
    const std::size_t begin = (*offsets)[span.start];
    const std::size_t end = (*offsets)[span.end];
    const std::string_view label = LabelName(span.label);
    out.append(text.substr(cursor, begin - cursor));
    out.append("<").append(label).append("> ");
    out.append(text.substr(begin, end - begin));
    out.append(" </").append(label).append(">");
    cursor = end;
  }
  out.append(text.substr(cursor));
  return out;
}

StrippedText StripTags(std::string_view augmented) {
  StrippedText result;
  std::size_t code_points = 0;  // length of result.text so far
  std::optional<EntitySpan> open;
  std::size_t open_position = 0;

  std::size_t i = 0;
  while (i < augmented.size()) {
    std::optional<Tag> tag;
    if (augmented[i] == '<') tag = TagAt(augmented, i);
    if (!tag) {
      std::size_t next = augmented.find('<', i + 1);
      if (next == std::string_view::npos) next = augmented.size();
      std::string_view chunk = augmented.substr(i, next - i);
      auto count = utf8::CodePointCount(chunk);
      if (!count) throw ParseError("text is not valid UTF-8", {}, i);
      result.text.append(chunk);
      code_points += *count;
      i = next;
      continue;
    }

    auto label = LabelFromName(tag->name);
    if (!label) {
      throw ParseError("unknown tag <" + std::string(tag->closing ? "/" : "") +
                           std::string(tag->name) + ">",
                       {}, i);
    }
    if (!tag->closing) {
      if (open) {
        throw ParseError("tag <" + std::string(tag->name) +
                             "> nested inside <" +
                             std::string(LabelName(open->label)) + ">",
                         {}, i);
      }
      i += tag->size;
      if (i < augmented.size() && augmented[i] == ' ') ++i;
      open = EntitySpan{code_points, code_points, *label};
      open_position = i;
      continue;
    }

    if (!open) {
      throw ParseError("closing tag </" + std::string(tag->name) +
                           "> without a matching opening tag",
                       {}, i);
    }
    if (open->label != *label) {
      throw ParseError("closing tag </" + std::string(tag->name) +
                           "> does not match <" +
                           std::string(LabelName(open->label)) + ">",
                       {}, i);
    }
    // Drop the padding space that precedes the closing tag.
    if (!result.text.empty() && result.text.back() == ' ' &&
        code_points > open->start && i > open_position &&
        augmented[i - 1] == ' ') {
      result.text.pop_back();
      --code_points;
    }
    open->end = code_points;
    if (open->end == open->start) {
      throw ParseError("empty <" + std::string(tag->name) + "> span", {}, i);
    }
    result.spans.push_back(*open);
    open.reset();
    i += tag->size;
  }
  if (open) {
    throw ParseError("unterminated <" + std::string(LabelName(open->label)) +
                         "> tag",
                     {}, open_position);
  }
  return result;
}

}  // namespace formgen
