#pragma once

#include <map>
#include <vector>

#include "qgb/monomial.hpp"
#include "qgb/rational.hpp"

namespace qgb {

/// Exact noncommutative polynomial over the rationals: a finite map from
/// monomials to nonzero coefficients. The zero polynomial has an empty map.
class Polynomial {
 public:
  Polynomial() = default;  // zero

  static Polynomial zero() { return {}; }
  static Polynomial one() { return term(1, Monomial::one()); }
  static Polynomial constant(const Rational& c) { return term(c, Monomial::one()); }
  static Polynomial term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // zero or a single term on the empty word
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of m; zero when absent.
  Rational coeff(const Monomial& m) const;
  bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::vector<Monomial> support() const;

  /// += c·m, dropping the entry when the result cancels.
  void add_term(const Rational& c, const Monomial& m);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& f);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Monomial, Rational> terms_;
};

}  // namespace qgb
