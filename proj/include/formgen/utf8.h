#ifndef FORMGEN_UTF8_H_
#define FORMGEN_UTF8_H_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace formgen::utf8 {

// Byte offset of every code point in `text`, followed by text.size(), so the
// result has CodePointCount(text) + 1 entries. Returns nullopt for malformed
// UTF-8.
std::optional<std::vector<std::size_t>> CodePointOffsets(std::string_view text);

// Number of Unicode scalar values; nullopt for malformed UTF-8.
std::optional<std::size_t> CodePointCount(std::string_view text);

}  // namespace formgen::utf8

#endif  // FORMGEN_UTF8_H_
