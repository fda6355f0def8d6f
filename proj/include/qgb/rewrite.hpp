#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "qgb/order.hpp"
#include "qgb/polynomial.hpp"
#include "qgb/quiver.hpp"

namespace qgb {

using GenIndex = std::size_t;

/// Divisor-monomial selection: for each generator, the set of support
/// monomials allowed to trigger a rewrite.
class DivisorMap {
 public:
  DivisorMap() = default;

  static DivisorMap leading_monomials(std::span<const Polynomial> gens, const MonomialOrder& ord);
  static DivisorMap full_support(std::span<const Polynomial> gens);

  /// Every entry must lie in the support of its generator.
  void set(GenIndex gen, std::set<Monomial> divisors, std::span<const Polynomial> gens);

  const std::set<Monomial>& at(GenIndex gen) const;  // error when undefined
  bool defined(GenIndex gen) const { return entries_.count(gen) != 0; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const DivisorMap&, const DivisorMap&) = default;

 private:
  std::map<GenIndex, std::set<Monomial>> entries_;
};

/// True iff σ(m) = σ(g) for every generator g and every m in DM(g).
/// The map must be defined on every generator.
bool dm_compatible(const LabelledQuiver& q, std::span<const Polynomial> gens, const DivisorMap& dm);

struct ReductionStep {
  Rational lambda;
  Monomial left;
  GenIndex gen;
  Monomial right;
  Monomial divisor;  // the m in DM(gen) whose occurrence left·m·right was hit
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Polynomial final;
};

/// f + λ·a·g·b. Requires m in supp(g) and a·m·b in supp(f).
Polynomial rewrite_step(const Polynomial& f, const Polynomial& g, const Monomial& m,
                        const Monomial& a, const Monomial& b, const Rational& lambda);

struct ReduceOptions {
  const MonomialOrder* order = nullptr;  // required for leading-monomial maps
  std::size_t cap = 100000;              // applies to general divisor maps only
  /// When set, each step using a divisor m with σ(m) = σ(g) is checked to only
  /// grow signatures (σ(before) ⊆ σ(after)).
  const LabelledQuiver* quiver = nullptr;
};

struct ReduceResult {
  Polynomial normal_form;
  ReductionTrace trace;
};

/// Deterministic step selection: the greatest reducible monomial of f, the
/// rightmost divisor occurrence inside it, then the lowest generator index.
/// λ cancels the matched term. Returns nothing when f is in normal form.
std::optional<ReductionStep> find_reduction_step(const Polynomial& f,
                                                 std::span<const Polynomial> gens,
                                                 const DivisorMap& dm, const MonomialOrder* ord);

/// Repeats find_reduction_step until no divisor monomial divides any support
/// monomial, recording every step. General divisor maps are capped and raise
/// limit_error ("possibly nonterminating") when the cap is hit.
ReduceResult reduce(const Polynomial& f, std::span<const Polynomial> gens, const DivisorMap& dm,
                    const ReduceOptions& opts = {});

/// Standard polynomial reduction: divisor map = leading monomials w.r.t. ord.
ReduceResult reduce(const Polynomial& f, std::span<const Polynomial> gens,
                    const MonomialOrder& ord, const LabelledQuiver* quiver = nullptr);

/// Σ (−λᵢ)·aᵢ·gᵢ·bᵢ over the trace; equals (reduced input) − trace.final.
Polynomial trace_expand(std::span<const Polynomial> gens, const ReductionTrace& trace);

}  // namespace qgb
