#include "formgen/decimal.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "formgen/error.h"

namespace formgen {
namespace {

using Mantissa = Decimal::Mantissa;

Mantissa PowerOfTen(int n) {
  Mantissa result = 1;
  Mantissa base = 10;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// Both operands rescaled to the smaller exponent.
std::pair<Mantissa, Mantissa> Align(const Decimal& a, const Decimal& b,
                                    int* exponent) {
  *exponent = std::min(a.exponent(), b.exponent());
  return {a.mantissa() * PowerOfTen(a.exponent() - *exponent),
          b.mantissa() * PowerOfTen(b.exponent() - *exponent)};
}

}  // namespace

Decimal::Decimal(std::int64_t value) : mantissa_(value), exponent_(0) {
  Normalize();
}

Decimal::Decimal(Mantissa mantissa, int exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  Normalize();
}

void Decimal::Normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  while (mantissa_ % 10 == 0) {
    mantissa_ /= 10;
    ++exponent_;
  }
}

std::optional<Decimal> Decimal::Parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  int fraction_digits = 0;
  bool seen_digit = false;
  while (i < text.size() && IsDigit(text[i])) {
    digits.push_back(text[i++]);
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && IsDigit(text[i])) {
      digits.push_back(text[i++]);
      ++fraction_digits;
      seen_digit = true;
    }
  }
  if (!seen_digit) return std::nullopt;
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !IsDigit(text[i])) return std::nullopt;
    while (i < text.size() && IsDigit(text[i])) {
      exponent = exponent * 10 + (text[i++] - '0');
      if (exponent > 100000) return std::nullopt;
    }
    if (exp_negative) exponent = -exponent;
  }
  if (i != text.size()) return std::nullopt;

  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) return Decimal();
  digits.erase(0, first);
  std::size_t last = digits.find_last_not_of('0');
  long trailing = static_cast<long>(digits.size() - 1 - last);
  digits.erase(last + 1);
  long final_exponent = exponent - fraction_digits + trailing;
  long magnitude = final_exponent + static_cast<long>(digits.size());
  if (final_exponent < -kMaxExponent || magnitude > kMaxExponent) {
    return std::nullopt;
  }
  Mantissa mantissa(digits);
  if (negative) mantissa = -mantissa;
  return Decimal(std::move(mantissa), static_cast<int>(final_exponent));
}

Decimal Decimal::FromString(std::string_view text) {
  auto parsed = Parse(text);
  if (!parsed) {
    throw ParseError("invalid decimal number '" + std::string(text) + "'");
  }
  return *std::move(parsed);
}

Decimal Decimal::FromDouble(double value) {
  if (!std::isfinite(value)) {
    throw ParseError("non-finite number cannot be represented exactly");
  }
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return FromString(std::string_view(buffer, end - buffer));
}

std::string Decimal::ToString() const {
  if (mantissa_ == 0) return "0";
  std::string digits = mantissa_.sign() < 0 ? Mantissa(-mantissa_).str()
                                            : mantissa_.str();
  std::string out = mantissa_.sign() < 0 ? "-" : "";
  if (exponent_ >= 0) {
    out += digits;
    out.append(static_cast<std::size_t>(exponent_), '0');
    return out;
  }
  std::size_t fraction = static_cast<std::size_t>(-exponent_);
  if (digits.size() <= fraction) {
    out += "0.";
    out.append(fraction - digits.size(), '0');
    out += digits;
  } else {
    out += digits.substr(0, digits.size() - fraction);
    out += '.';
    out += digits.substr(digits.size() - fraction);
  }
  return out;
}

double Decimal::ToDouble() const {
  std::string text = ToString();
  return std::strtod(text.c_str(), nullptr);
}

Decimal Decimal::Abs() const { return Sign() < 0 ? -*this : *this; }

Decimal Decimal::operator-() const {
  Decimal out = *this;
  out.mantissa_ = -out.mantissa_;
  return out;
}

Decimal operator+(const Decimal& a, const Decimal& b) {
  if (a.IsZero()) return b;
  if (b.IsZero()) return a;
  int exponent = 0;
  auto [ma, mb] = Align(a, b, &exponent);
  return Decimal(ma + mb, exponent);
}

Decimal operator-(const Decimal& a, const Decimal& b) { return a + (-b); }

Decimal& Decimal::operator+=(const Decimal& other) {
  *this = *this + other;
  return *this;
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
  if (a.Sign() != b.Sign()) return a.Sign() <=> b.Sign();
  int exponent = 0;
  auto [ma, mb] = Align(a, b, &exponent);
  if (ma < mb) return std::strong_ordering::less;
  if (mb < ma) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Decimal& d) {
  return os << d.ToString();
}

}  // namespace formgen
