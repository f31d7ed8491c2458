#include "hardy/rational.hpp"

#include <cctype>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hardy {

namespace {

bool is_integer_text(std::string_view text, bool allowSign) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (allowSign && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

std::string strip(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  const std::string text = strip(raw);
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num, true) || !is_integer_text(den, false)) {
    throw std::invalid_argument("malformed rational \"" + text + "\"");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

std::string format_double(double value) {
  if (value == std::numeric_limits<double>::infinity()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

const Rational& Extended::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite Extended");
  return value_;
}

double Extended::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_.get_d();
}

Extended Extended::reciprocal() const {
  if (infinite_) return Extended(0);
  if (sgn(value_) == 0) return infinity();
  return Extended(Rational(1 / value_));
}

Extended operator+(const Extended& a, const Extended& b) {
  if (a.infinite_ || b.infinite_) return Extended::infinity();
  return Extended(Rational(a.value_ + b.value_));
}

Extended operator*(const Extended& a, const Extended& b) {
  if (a.is_zero() || b.is_zero()) return Extended(0);
  if (a.infinite_ || b.infinite_) return Extended::infinity();
  return Extended(Rational(a.value_ * b.value_));
}

Extended operator/(const Extended& a, const Rational& b) {
  if (sgn(b) <= 0) throw std::domain_error("Extended division by a non-positive rational");
  if (a.infinite_) return a;
  return Extended(Rational(a.value_ / b));
}

bool operator==(const Extended& a, const Extended& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  return cmp(a.value_, b.value_) <=> 0;
}

std::string to_string(const Extended& value) {
  return value.is_infinite() ? "inf" : to_string(value.value());
}

Extended parse_extended(std::string_view text) {
  if (strip(text) == "inf") return Extended::infinity();
  return Extended(parse_rational(text));
}

ScalarField to_field(const std::vector<Rational>& values) {
  return ScalarField(values.begin(), values.end());
}

}  // namespace hardy
