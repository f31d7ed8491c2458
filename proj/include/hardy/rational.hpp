#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hardy {

using Rational = mpq_class;

/// Parses "n", "-n" or "n/d" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Formats a binary64 with 17 significant digits ("inf" for +infinity).
std::string format_double(double value);

/// Non-negative rational extended by +infinity. Arithmetic follows the
/// measure-theory conventions: 0 * inf = 0, x + inf = inf, 1/0 = inf,
/// 1/inf = 0.
class Extended {
 public:
  Extended() = default;
  Extended(const Rational& value) : value_(value) {}  // NOLINT: implicit by design of the value type
  Extended(long value) : value_(value) {}             // NOLINT
  Extended(int value) : value_(value) {}              // NOLINT

  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  [[nodiscard]] bool is_infinite() const { return infinite_; }
  [[nodiscard]] bool is_finite() const { return !infinite_; }
  [[nodiscard]] bool is_zero() const { return !infinite_ && sgn(value_) == 0; }

  /// Finite value. Precondition: is_finite().
  [[nodiscard]] const Rational& value() const;

  [[nodiscard]] double to_double() const;
  [[nodiscard]] Extended reciprocal() const;

  friend Extended operator+(const Extended& a, const Extended& b);
  friend Extended operator*(const Extended& a, const Extended& b);
  /// Division by a strictly positive finite rational.
  friend Extended operator/(const Extended& a, const Rational& b);

  Extended& operator+=(const Extended& other) { return *this = *this + other; }

  friend bool operator==(const Extended& a, const Extended& b);
  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b);

 private:
  Rational value_{0};
  bool infinite_ = false;
};

std::string to_string(const Extended& value);
/// Accepts everything parse_rational does plus "inf".
Extended parse_extended(std::string_view text);

/// Per-point extended non-negative values (f, g, u, the minorant, ...).
using ScalarField = std::vector<Extended>;

ScalarField to_field(const std::vector<Rational>& values);

}  // namespace hardy
