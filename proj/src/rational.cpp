#include "qgb/rational.hpp"

#include <cctype>

#include "qgb/error.hpp"

namespace qgb {

Rational::Rational(long num, long den) {
  if (den == 0) throw error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  // Validate shape by hand before handing to GMP: a canonicalize() on a zero
  // denominator raises SIGFPE instead of throwing.
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++digits;
  if (digits == 0) throw input_error("malformed rational '" + text + "'");
  bool zero_den = false;
  if (i < text.size()) {
    if (text[i] != '/') throw input_error("malformed rational '" + text + "'");
    ++i;
    std::size_t den_start = i, den_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++den_digits;
    if (den_digits == 0 || i != text.size())
      throw input_error("malformed rational '" + text + "'");
    zero_den = text.find_first_not_of('0', den_start) >= i;
  }
  if (zero_den) throw input_error("rational with zero denominator '" + text + "'");
  mpq_class v(text, 10);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw error("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

}  // namespace qgb
