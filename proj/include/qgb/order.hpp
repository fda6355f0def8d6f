#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "qgb/monomial.hpp"
#include "qgb/polynomial.hpp"
#include "qgb/quiver.hpp"

namespace qgb {

/// A monomial order: well-founded total order compatible with multiplication.
class MonomialOrder {
 public:
  virtual ~MonomialOrder() = default;
  virtual std::strong_ordering compare(const Monomial& a, const Monomial& b) const = 0;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

/// Degree-lexicographic order with an explicit symbol precedence, greatest
/// symbol first. The precedence must list every alphabet symbol exactly once.
class DegLexOrder final : public MonomialOrder {
 public:
  DegLexOrder(const Alphabet& alphabet, std::vector<SymbolId> precedence_greatest_first);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const override;

  const std::vector<SymbolId>& precedence() const { return precedence_; }

 private:
  std::vector<std::uint32_t> rank_;  // rank 0 = greatest
  std::vector<SymbolId> precedence_;
};

/// Coefficient and monomial of the greatest term. Error on the zero polynomial.
std::pair<Rational, Monomial> leading_term(const MonomialOrder& ord, const Polynomial& f);
Monomial leading_monomial(const MonomialOrder& ord, const Polynomial& f);

/// f scaled so its leading coefficient is 1. Error on the zero polynomial.
Polynomial monic(const MonomialOrder& ord, const Polynomial& f);

enum class QPartialResult { Less, Equal, Greater, Incomparable };

/// The quiver-restricted partial order: m1 below m2 iff m1 <= m2 under ord and
/// σ(m2) ⊆ σ(m1). Equal only for identical monomials.
QPartialResult q_compare(const LabelledQuiver& q, const MonomialOrder& ord, const Monomial& m1,
                         const Monomial& m2);

/// f nonzero, compatible, and σ(LM(f)) = σ(f).
bool is_q_order_compatible(const LabelledQuiver& q, const MonomialOrder& ord, const Polynomial& f);

}  // namespace qgb
