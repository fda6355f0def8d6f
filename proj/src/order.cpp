#include "qgb/order.hpp"

#include <limits>

#include "qgb/error.hpp"

namespace qgb {

DegLexOrder::DegLexOrder(const Alphabet& alphabet, std::vector<SymbolId> precedence_greatest_first)
    : precedence_(std::move(precedence_greatest_first)) {
  rank_.assign(alphabet.size(), std::numeric_limits<std::uint32_t>::max());
  for (std::uint32_t r = 0; r < precedence_.size(); ++r) {
    const SymbolId x = precedence_[r];
    if (x >= alphabet.size()) throw input_error("precedence symbol not in alphabet");
    if (rank_[x] != std::numeric_limits<std::uint32_t>::max())
      throw input_error("symbol '" + alphabet.name(x) + "' listed twice in precedence");
    rank_[x] = r;
  }
  for (SymbolId x = 0; x < rank_.size(); ++x)
    if (rank_[x] == std::numeric_limits<std::uint32_t>::max())
      throw input_error("precedence does not cover symbol '" + alphabet.name(x) + "'");
}

std::strong_ordering DegLexOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (a.at(i) != b.at(i)) return rank_[b.at(i)] <=> rank_[a.at(i)];  // smaller rank = greater symbol
  }
  return std::strong_ordering::equal;
}

std::pair<Rational, Monomial> leading_term(const MonomialOrder& ord, const Polynomial& f) {
  if (f.is_zero()) throw error("leading term of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms()) {
    if (!best || ord.greater(m, *best)) best = &m;
  }
  return {f.coeff(*best), *best};
}

Monomial leading_monomial(const MonomialOrder& ord, const Polynomial& f) {
  return leading_term(ord, f).second;
}

Polynomial monic(const MonomialOrder& ord, const Polynomial& f) {
  const auto [lc, lm] = leading_term(ord, f);
  if (lc.is_one()) return f;
  return lc.inverse() * f;
}

QPartialResult q_compare(const LabelledQuiver& q, const MonomialOrder& ord, const Monomial& m1,
                         const Monomial& m2) {
  const auto c = ord.compare(m1, m2);
  if (c == 0) return QPartialResult::Equal;
  if (c < 0) {
    if (q.sigma(m2).subset_of(q.sigma(m1))) return QPartialResult::Less;
  } else {
    if (q.sigma(m1).subset_of(q.sigma(m2))) return QPartialResult::Greater;
  }
  return QPartialResult::Incomparable;
}

bool is_q_order_compatible(const LabelledQuiver& q, const MonomialOrder& ord, const Polynomial& f) {
  if (f.is_zero()) throw error("q-order compatibility of the zero polynomial");
  const Signature sf = q.sigma(f);
  if (sf.empty()) return false;
  return q.sigma(leading_monomial(ord, f)) == sf;
}

}  // namespace qgb
