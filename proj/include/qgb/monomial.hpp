#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "qgb/symbol.hpp"

namespace qgb {

/// A word over the alphabet; the empty word is the multiplicative unit.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<SymbolId> word) : word_(std::move(word)) {}

  static Monomial one() { return Monomial(); }
  static Monomial letter(SymbolId x) { return Monomial({x}); }

  std::size_t degree() const { return word_.size(); }
  bool is_one() const { return word_.empty(); }
  const std::vector<SymbolId>& word() const { return word_; }
  SymbolId at(std::size_t i) const { return word_[i]; }

  Monomial prefix(std::size_t len) const;
  Monomial suffix(std::size_t len) const;
  Monomial factor(std::size_t pos, std::size_t len) const;
  Monomial pow(unsigned n) const;

  /// Concatenation; degrees add.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.word_ == b.word_; }

  /// Canonical container order: degree first, then lexicographic on symbol ids.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<SymbolId> word_;
};

/// All splittings m = a·d·b, ordered by the position of d (leftmost first).
/// Empty when d is not a factor of m.
std::vector<std::pair<Monomial, Monomial>> find_divisions(const Monomial& m, const Monomial& d);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace qgb
