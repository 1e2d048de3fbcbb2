#ifndef FORMGEN_DECIMAL_H_
#define FORMGEN_DECIMAL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace formgen {

// Exact decimal number: mantissa * 10^exponent with an arbitrary-precision
// mantissa. Values are kept normalized (no trailing zeros in the mantissa,
// exponent 0 for zero) so structural and numeric equality coincide.
class Decimal {
 public:
  using Mantissa = boost::multiprecision::cpp_int;

  // Exponents outside this range are rejected when parsing.
  static constexpr int kMaxExponent = 400;

  Decimal() = default;
  Decimal(std::int64_t value);  // NOLINT: implicit by intent
  Decimal(Mantissa mantissa, int exponent);

  // Accepts [+-]digits[.digits][(e|E)[+-]digits], with digits on at least one
  // side of the point. Returns nullopt on anything else.
  static std::optional<Decimal> Parse(std::string_view text);
  // Same as Parse but throws ParseError.
  static Decimal FromString(std::string_view text);
  // Shortest round-trip representation of a finite double. Throws ParseError
  // for NaN or infinity.
  static Decimal FromDouble(double value);

  // Plain positional notation: "-12.5", "3000", "0.001". Never uses an
  // exponent, so parsing the result yields the same value.
  std::string ToString() const;
  double ToDouble() const;

  bool IsZero() const { return mantissa_ == 0; }
  bool IsOne() const { return exponent_ == 0 && mantissa_ == 1; }
  int Sign() const { return mantissa_.sign(); }

  Decimal Abs() const;
  Decimal operator-() const;
  friend Decimal operator+(const Decimal& a, const Decimal& b);
  friend Decimal operator-(const Decimal& a, const Decimal& b);
  Decimal& operator+=(const Decimal& other);

  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

  const Mantissa& mantissa() const { return mantissa_; }
  int exponent() const { return exponent_; }

 private:
  void Normalize();

  Mantissa mantissa_ = 0;
  int exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Decimal& d);

}  // namespace formgen

#endif  // FORMGEN_DECIMAL_H_
