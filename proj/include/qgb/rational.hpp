#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace qgb {

/// Arbitrary-precision rational. Always kept in lowest terms with a positive
/// denominator, so equal values have equal representations.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, coefficients read naturally
  Rational(long num, long den);

  /// Accepts "p" or "p/q" with an optional leading sign. Rejects q = 0.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return cmp(v_, 1) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // error on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const;
  Rational abs() const;

  /// "p" or "p/q", denominator omitted when 1.
  std::string str() const { return v_.get_str(); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c <=> 0;
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace qgb
