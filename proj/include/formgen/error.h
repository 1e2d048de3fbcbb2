#ifndef FORMGEN_ERROR_H_
#define FORMGEN_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace formgen {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (JSON line, IR string, number literal). `position` is a
// byte offset into the offending string when one is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::optional<std::size_t> line = {},
             std::optional<std::size_t> position = {});

  // Message without the line/offset decoration.
  const std::string& detail() const { return detail_; }
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> position() const { return position_; }

 private:
  std::string detail_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> position_;
};

// Data that parses but breaks a domain invariant. `field_path` follows a
// JSON-pointer-like dotted form, e.g. "spans[2].label".
class ValidationError : public Error {
 public:
  ValidationError(const std::string& message, std::string field_path = {},
                  std::optional<std::size_t> line = {});

  const std::string& detail() const { return detail_; }
  const std::string& field_path() const { return field_path_; }
  std::optional<std::size_t> line() const { return line_; }

  // Copy of this error with a line number attached and `prefix` prepended to
  // the field path.
  ValidationError Located(std::size_t line, const std::string& prefix) const;

 private:
  std::string detail_;
  std::string field_path_;
  std::optional<std::size_t> line_;
};

// A gold record whose `type` is neither "objvar" nor "linear".
class UnsupportedDeclarationError : public ValidationError {
 public:
  UnsupportedDeclarationError(const std::string& type,
                              std::string field_path = {},
                              std::optional<std::size_t> line = {});

  const std::string& type() const { return type_; }

  UnsupportedDeclarationError Located(std::size_t line,
                                      const std::string& prefix) const;

 private:
  std::string type_;
};

// A variable name that does not resolve through an order mapping.
class MappingError : public Error {
 public:
  using Error::Error;
};

// Wrong shape: objective count, matrix dimensions, empty rows.
class StructureError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace formgen

#endif  // FORMGEN_ERROR_H_
