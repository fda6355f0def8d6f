#include "qgb/rewrite.hpp"

#include <algorithm>

#include "qgb/error.hpp"

namespace qgb {

DivisorMap DivisorMap::leading_monomials(std::span<const Polynomial> gens,
                                         const MonomialOrder& ord) {
  DivisorMap dm;
  for (GenIndex i = 0; i < gens.size(); ++i)
    dm.entries_[i] = {leading_monomial(ord, gens[i])};
  return dm;
}

DivisorMap DivisorMap::full_support(std::span<const Polynomial> gens) {
  DivisorMap dm;
  for (GenIndex i = 0; i < gens.size(); ++i) {
    auto supp = gens[i].support();
    dm.entries_[i] = std::set<Monomial>(supp.begin(), supp.end());
  }
  return dm;
}

void DivisorMap::set(GenIndex gen, std::set<Monomial> divisors, std::span<const Polynomial> gens) {
  if (gen >= gens.size()) throw error("divisor map: generator index out of range");
  if (divisors.empty()) throw input_error("divisor map: empty divisor set");
  for (const auto& m : divisors)
    if (!gens[gen].contains(m))
      throw input_error("divisor map: monomial not in the generator's support");
  entries_[gen] = std::move(divisors);
}

const std::set<Monomial>& DivisorMap::at(GenIndex gen) const {
  const auto it = entries_.find(gen);
  if (it == entries_.end()) throw error("divisor map undefined on a generator");
  return it->second;
}

bool dm_compatible(const LabelledQuiver& q, std::span<const Polynomial> gens,
                   const DivisorMap& dm) {
  for (GenIndex i = 0; i < gens.size(); ++i) {
    const Signature sg = q.sigma(gens[i]);
    for (const auto& m : dm.at(i))
      if (!(q.sigma(m) == sg)) return false;
  }
  return true;
}

Polynomial rewrite_step(const Polynomial& f, const Polynomial& g, const Monomial& m,
                        const Monomial& a, const Monomial& b, const Rational& lambda) {
  if (!g.contains(m)) throw error("rewrite: divisor monomial not in the generator's support");
  if (!f.contains(a * m * b)) throw error("rewrite: a*m*b is not a monomial of f");
  return f + lambda * (Polynomial::term(1, a) * g * Polynomial::term(1, b));
}

std::optional<ReductionStep> find_reduction_step(const Polynomial& f,
                                                 std::span<const Polynomial> gens,
                                                 const DivisorMap& dm, const MonomialOrder* ord) {
  std::vector<Monomial> mons = f.support();
  if (ord)
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial& a, const Monomial& b) { return ord->greater(a, b); });
  else
    std::sort(mons.begin(), mons.end(), [](const Monomial& a, const Monomial& b) { return a > b; });

  for (const auto& target : mons) {
    // Best division of this monomial: maximal start position of the divisor
    // occurrence, ties broken by generator order, then by divisor.
    std::optional<ReductionStep> best;
    std::size_t best_pos = 0;
    for (GenIndex gi = 0; gi < gens.size(); ++gi) {
      for (const auto& m : dm.at(gi)) {
        const auto divisions = find_divisions(target, m);
        if (divisions.empty()) continue;
        const auto& [a, b] = divisions.back();  // rightmost occurrence
        const std::size_t pos = a.degree();
        if (!best || pos > best_pos) {
          const Rational lambda = -(f.coeff(target) / gens[gi].coeff(m));
          best = ReductionStep{lambda, a, gi, b, m};
          best_pos = pos;
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

ReduceResult reduce(const Polynomial& f, std::span<const Polynomial> gens, const DivisorMap& dm,
                    const ReduceOptions& opts) {
  if (dm.size() < gens.size()) throw error("divisor map undefined on a generator");
  bool lm_map = opts.order != nullptr;
  if (lm_map) {
    for (GenIndex i = 0; i < gens.size() && lm_map; ++i)
      lm_map = dm.at(i) == std::set<Monomial>{leading_monomial(*opts.order, gens[i])};
  }

  ReduceResult res;
  Polynomial cur = f;
  while (auto step = find_reduction_step(cur, gens, dm, opts.order)) {
    if (!lm_map && res.trace.steps.size() >= opts.cap)
      throw limit_error("rewriting cap exceeded: possibly nonterminating divisor map");
    const Polynomial next = cur + step->lambda * (Polynomial::term(1, step->left) *
                                                  gens[step->gen] *
                                                  Polynomial::term(1, step->right));
    if (opts.quiver) {
      const auto& q = *opts.quiver;
      if (q.sigma(step->divisor) == q.sigma(gens[step->gen]) &&
          !q.sigma(cur).subset_of(q.sigma(next)))
        throw error("rewrite step shrank the signature despite a compatible divisor");
    }
    res.trace.steps.push_back(std::move(*step));
    cur = next;
  }
  res.trace.final = cur;
  res.normal_form = std::move(cur);
  return res;
}

ReduceResult reduce(const Polynomial& f, std::span<const Polynomial> gens,
                    const MonomialOrder& ord, const LabelledQuiver* quiver) {
  ReduceOptions opts;
  opts.order = &ord;
  opts.quiver = quiver;
  return reduce(f, gens, DivisorMap::leading_monomials(gens, ord), opts);
}

Polynomial trace_expand(std::span<const Polynomial> gens, const ReductionTrace& trace) {
  Polynomial out;
  for (const auto& step : trace.steps) {
    if (step.gen >= gens.size()) throw error("trace references an unknown generator");
    out += (-step.lambda) * (Polynomial::term(1, step.left) * gens[step.gen] *
                             Polynomial::term(1, step.right));
  }
  return out;
}

}  // namespace qgb
