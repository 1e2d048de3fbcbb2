#include "formgen/error.h"

#include <utility>

namespace formgen {
namespace {

std::string Decorate(const std::string& message,
                     std::optional<std::size_t> line,
                     std::optional<std::size_t> position) {
  std::string out;
  if (line) out += "line " + std::to_string(*line) + ": ";
  out += message;
  if (position) out += " (at offset " + std::to_string(*position) + ")";
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message,
                       std::optional<std::size_t> line,
                       std::optional<std::size_t> position)
    : Error(Decorate(message, line, position)),
      detail_(message),
      line_(line),
      position_(position) {}

ValidationError::ValidationError(const std::string& message,
                                 std::string field_path,
                                 std::optional<std::size_t> line)
    : Error(Decorate(field_path.empty() ? message : field_path + ": " + message,
                     line, std::nullopt)),
      detail_(message),
      field_path_(std::move(field_path)),
      line_(line) {}

namespace {

std::string JoinPath(const std::string& prefix, const std::string& path) {
  if (prefix.empty()) return path;
  if (path.empty()) return prefix;
  if (path.front() == '[') return prefix + path;
  return prefix + "." + path;
}

}  // namespace

ValidationError ValidationError::Located(std::size_t line,
                                         const std::string& prefix) const {
  return ValidationError(detail_, JoinPath(prefix, field_path_), line);
}

UnsupportedDeclarationError::UnsupportedDeclarationError(
    const std::string& type, std::string field_path,
    std::optional<std::size_t> line)
    : ValidationError("unsupported declaration type '" + type + "'",
                      std::move(field_path), line),
      type_(type) {}

UnsupportedDeclarationError UnsupportedDeclarationError::Located(
    std::size_t line, const std::string& prefix) const {
  return UnsupportedDeclarationError(type_, JoinPath(prefix, field_path()),
                                     line);
}

}  // namespace formgen
