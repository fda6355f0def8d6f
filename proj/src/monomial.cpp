#include "qgb/monomial.hpp"

#include <algorithm>

#include "qgb/error.hpp"

namespace qgb {

Monomial Monomial::prefix(std::size_t len) const { return factor(0, len); }

Monomial Monomial::suffix(std::size_t len) const { return factor(word_.size() - len, len); }

Monomial Monomial::factor(std::size_t pos, std::size_t len) const {
  if (pos + len > word_.size()) throw error("monomial factor out of range");
  return Monomial(std::vector<SymbolId>(word_.begin() + pos, word_.begin() + pos + len));
}

Monomial Monomial::pow(unsigned n) const {
  std::vector<SymbolId> w;
  w.reserve(word_.size() * n);
  for (unsigned k = 0; k < n; ++k) w.insert(w.end(), word_.begin(), word_.end());
  return Monomial(std::move(w));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<SymbolId> w;
  w.reserve(a.word_.size() + b.word_.size());
  w.insert(w.end(), a.word_.begin(), a.word_.end());
  w.insert(w.end(), b.word_.begin(), b.word_.end());
  return Monomial(std::move(w));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.word_.size() != b.word_.size()) return a.word_.size() <=> b.word_.size();
  for (std::size_t i = 0; i < a.word_.size(); ++i)
    if (a.word_[i] != b.word_[i]) return a.word_[i] <=> b.word_[i];
  return std::strong_ordering::equal;
}

std::vector<std::pair<Monomial, Monomial>> find_divisions(const Monomial& m, const Monomial& d) {
  std::vector<std::pair<Monomial, Monomial>> out;
  if (d.degree() > m.degree()) return out;
  const auto& mw = m.word();
  const auto& dw = d.word();
  for (std::size_t pos = 0; pos + dw.size() <= mw.size(); ++pos) {
    if (std::equal(dw.begin(), dw.end(), mw.begin() + pos))
      out.emplace_back(m.prefix(pos), m.suffix(mw.size() - pos - dw.size()));
  }
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (SymbolId x : m.word()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qgb
