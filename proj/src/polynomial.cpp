#include "qgb/polynomial.hpp"

namespace qgb {

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
  Polynomial f;
  f.add_term(c, m);
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

void Polynomial::add_term(const Rational& c, const Monomial& m) {
  if (c.is_zero()) return;
  const auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, ma * mb);
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  Polynomial out;
  if (c.is_zero()) return out;
  for (const auto& [m, cf] : f.terms_) out.terms_.emplace(m, c * cf);
  return out;
}

}  // namespace qgb
