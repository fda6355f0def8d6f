#include "qgb/completion.hpp"

#include <set>

#include "qgb/error.hpp"
#include "qgb/rewrite.hpp"

namespace qgb {

namespace {

bool suffix_matches_prefix(const Monomial& u, const Monomial& v, std::size_t t) {
  for (std::size_t i = 0; i < t; ++i)
    if (u.at(u.degree() - t + i) != v.at(i)) return false;
  return true;
}

}  // namespace

std::vector<Ambiguity> ambiguities(const Monomial& lm_g, const Monomial& lm_g2, GenIndex id_g,
                                   GenIndex id_g2) {
  std::vector<Ambiguity> out;

  const auto overlaps = [&out](const Monomial& u, const Monomial& v, GenIndex iu, GenIndex iv) {
    if (u.degree() == 0 || v.degree() == 0) return;
    const std::size_t tmax = std::min(u.degree(), v.degree()) - 1;
    for (std::size_t t = 1; t <= tmax; ++t) {
      if (!suffix_matches_prefix(u, v, t)) continue;
      Ambiguity amb;
      amb.g = iu;
      amb.g2 = iv;
      amb.a = Monomial::one();
      amb.b = v.suffix(v.degree() - t);
      amb.a2 = u.prefix(u.degree() - t);
      amb.b2 = Monomial::one();
      amb.source = u * amb.b;
      out.push_back(std::move(amb));
    }
  };

  const auto inclusions = [&out](const Monomial& u, const Monomial& v, GenIndex iu, GenIndex iv) {
    for (const auto& [a, b] : find_divisions(v, u)) {
      Ambiguity amb;
      amb.g = iu;
      amb.g2 = iv;
      amb.a = a;
      amb.b = b;
      amb.a2 = Monomial::one();
      amb.b2 = Monomial::one();
      amb.source = v;
      out.push_back(std::move(amb));
    }
  };

  if (id_g == id_g2) {
    // Self-overlaps only; the inclusion of a word in itself is the identical
    // occurrence and never forms an ambiguity.
    overlaps(lm_g, lm_g2, id_g, id_g2);
    return out;
  }
  overlaps(lm_g, lm_g2, id_g, id_g2);
  overlaps(lm_g2, lm_g, id_g2, id_g);
  if (lm_g == lm_g2)
    inclusions(lm_g, lm_g2, id_g, id_g2);
  else if (lm_g.degree() < lm_g2.degree())
    inclusions(lm_g, lm_g2, id_g, id_g2);
  else if (lm_g2.degree() < lm_g.degree())
    inclusions(lm_g2, lm_g, id_g2, id_g);
  return out;
}

std::vector<Ambiguity> ambiguities(const Polynomial& g, const Polynomial& g2,
                                   const MonomialOrder& ord) {
  const bool same = g == g2;
  return ambiguities(leading_monomial(ord, g), leading_monomial(ord, g2), 0, same ? 0 : 1);
}

std::pair<Polynomial, Monomial> s_polynomial(const Ambiguity& amb,
                                             std::span<const Polynomial> gens) {
  if (amb.g >= gens.size() || amb.g2 >= gens.size())
    throw error("ambiguity references an unknown generator");
  const std::size_t lm1_len = amb.source.degree() - amb.a.degree() - amb.b.degree();
  const std::size_t lm2_len = amb.source.degree() - amb.a2.degree() - amb.b2.degree();
  const Monomial lm1 = amb.source.factor(amb.a.degree(), lm1_len);
  const Monomial lm2 = amb.source.factor(amb.a2.degree(), lm2_len);
  if (!gens[amb.g].coeff(lm1).is_one() || !gens[amb.g2].coeff(lm2).is_one())
    throw error("s-polynomial requires monic generators");
  Polynomial s = Polynomial::term(1, amb.a) * gens[amb.g] * Polynomial::term(1, amb.b) -
                 Polynomial::term(1, amb.a2) * gens[amb.g2] * Polynomial::term(1, amb.b2);
  return {std::move(s), amb.source};
}

std::string to_string(DiscardReason r) {
  switch (r) {
    case DiscardReason::SourceIncompatible: return "source incompatible";
    case DiscardReason::SignatureNotContained: return "signature not contained in the source's";
    case DiscardReason::NotQOrderCompatible: return "not Q-order compatible";
    case DiscardReason::ReducedToZero: return "reduced to zero";
    case DiscardReason::SourceDegreeBound: return "source degree bound";
  }
  return "?";
}

std::vector<Polynomial> CompletionResult::basis_polys() const {
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.poly);
  return out;
}

std::vector<Polynomial> BuchbergerResult::basis_polys() const {
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.poly);
  return out;
}

namespace {

/// Shared state of both completion loops: the growing monic basis with
/// per-element certificates over the inputs, and the ambiguity queue (FIFO
/// within ascending source degree).
class Engine {
 public:
  Engine(std::span<const Generator> input, const MonomialOrder& ord,
         std::optional<std::size_t> max_source_degree,
         std::vector<std::pair<Ambiguity, DiscardReason>>* degree_discards)
      : ord_(ord), max_source_degree_(max_source_degree), degree_discards_(degree_discards) {
    input_.assign(input.begin(), input.end());
    for (const auto& g : input_) {
      if (g.poly.is_zero()) throw input_error("zero generator '" + g.name + "'");
      if (!taken_names_.insert(g.name).second)
        throw input_error("duplicate generator name '" + g.name + "'");
    }
    for (GenIndex i = 0; i < input_.size(); ++i) {
      const auto [lc, lm] = leading_term(ord_, input_[i].poly);
      monic_.push_back(lc.is_one() ? input_[i].poly : lc.inverse() * input_[i].poly);
      lms_.push_back(lm);
      names_.push_back(input_[i].name);
      Certificate c;
      c.claim = monic_.back();
      c.generators = input_;
      c.terms = {CertTerm{Polynomial::constant(lc.inverse()), i, Polynomial::one()}};
      certs_.emplace(input_[i].name, std::move(c));
      dm_.set(i, {lm}, monic_);
    }
    for (GenIndex j = 0; j < monic_.size(); ++j) enqueue_with_earlier(j);
  }

  std::span<const Polynomial> monic() const { return monic_; }
  const DivisorMap& dm() const { return dm_; }
  const std::string& name(GenIndex i) const { return names_[i]; }
  bool queue_empty() const { return queue_.empty(); }

  Ambiguity pop() {
    Ambiguity amb = std::move(queue_.begin()->second);
    queue_.erase(queue_.begin());
    return amb;
  }

  void drain_pending(std::vector<Ambiguity>& out) {
    for (auto& [key, amb] : queue_) out.push_back(std::move(amb));
    queue_.clear();
  }

  /// Adjoins s_final = SP(amb) + Σ λᵢaᵢgᵢbᵢ, normalized monic, and records a
  /// certificate over the inputs obtained by substituting the basis elements'
  /// own certificates.
  AddedElement adjoin(const Ambiguity& amb, const Polynomial& s_final,
                      std::span<const ReductionStep> steps, std::string note) {
    const auto [lc, lm] = leading_term(ord_, s_final);
    const Rational inv = lc.inverse();
    const Polynomial s_star = lc.is_one() ? s_final : inv * s_final;

    Certificate over_basis;
    over_basis.claim = s_star;
    for (GenIndex i = 0; i < monic_.size(); ++i)
      over_basis.generators.push_back(Generator{names_[i], monic_[i]});
    over_basis.terms.push_back(
        CertTerm{Polynomial::term(inv, amb.a), amb.g, Polynomial::term(1, amb.b)});
    over_basis.terms.push_back(
        CertTerm{Polynomial::term(-inv, amb.a2), amb.g2, Polynomial::term(1, amb.b2)});
    for (const auto& st : steps)
      over_basis.terms.push_back(
          CertTerm{Polynomial::term(inv * st.lambda, st.left), st.gen, Polynomial::term(1, st.right)});

    Certificate over_input = compose_certificates(over_basis, certs_);

    const std::string name = fresh_name();
    const GenIndex idx = monic_.size();
    names_.push_back(name);
    monic_.push_back(s_star);
    lms_.push_back(lm);
    dm_.set(idx, {lm}, monic_);
    certs_.emplace(name, over_input);
    enqueue_with_earlier(idx);
    return AddedElement{name, s_star, amb, std::move(over_input), std::move(note)};
  }

  const std::map<std::string, Certificate>& input_certificates() const { return certs_; }

 private:
  void enqueue_with_earlier(GenIndex j) {
    for (GenIndex i = 0; i <= j; ++i) {
      for (auto& amb : ambiguities(lms_[i], lms_[j], i, j)) {
        if (max_source_degree_ && amb.source.degree() > *max_source_degree_) {
          if (degree_discards_)
            degree_discards_->push_back({std::move(amb), DiscardReason::SourceDegreeBound});
          continue;
        }
        queue_.emplace(std::make_pair(amb.source.degree(), seq_++), std::move(amb));
      }
    }
  }

  std::string fresh_name() {
    for (;;) {
      std::string candidate = "s" + std::to_string(next_name_++);
      if (taken_names_.insert(candidate).second) return candidate;
    }
  }

  const MonomialOrder& ord_;
  std::optional<std::size_t> max_source_degree_;
  std::vector<std::pair<Ambiguity, DiscardReason>>* degree_discards_;

  std::vector<Generator> input_;
  std::vector<Polynomial> monic_;
  std::vector<Monomial> lms_;
  std::vector<std::string> names_;
  std::set<std::string> taken_names_;
  DivisorMap dm_;
  std::map<std::string, Certificate> certs_;  // basis name -> certificate over the inputs

  std::map<std::pair<std::size_t, std::size_t>, Ambiguity> queue_;
  std::size_t seq_ = 0;
  std::size_t next_name_ = 1;
};

}  // namespace

CompletionResult q_complete(const LabelledQuiver& q, std::span<const Generator> gens,
                            const MonomialOrder& ord, const CompletionConfig& cfg) {
  std::string offenders;
  for (const auto& g : gens) {
    const bool ok = !g.poly.is_zero() && is_q_order_compatible(q, ord, g.poly);
    if (!ok) offenders += (offenders.empty() ? "" : ", ") + g.name;
  }
  if (!offenders.empty())
    throw input_error("generators are not Q-order compatible: " + offenders);

  CompletionResult res;
  res.input_count = gens.size();
  Engine eng(gens, ord, cfg.max_source_degree, &res.discarded);

  while (!eng.queue_empty()) {
    if (res.processed >= cfg.max_ambiguities) break;
    const Ambiguity amb = eng.pop();
    ++res.processed;

    auto [s, m] = s_polynomial(amb, eng.monic());
    const Signature sig_m = q.sigma(m);
    if (sig_m.empty()) {
      res.discarded.push_back({amb, DiscardReason::SourceIncompatible});
      continue;
    }
    if (!sig_m.subset_of(q.sigma(s)))
      throw error("s-polynomial signature lemma violated");  // cannot happen for a Q-order compatible basis
    ++res.spoly_signature_checks;
    if (s.is_zero()) {
      res.discarded.push_back({amb, DiscardReason::ReducedToZero});
      continue;
    }
    if (!q.sigma(s).subset_of(sig_m)) {
      res.discarded.push_back({amb, DiscardReason::SignatureNotContained});
      continue;
    }
    if (!is_q_order_compatible(q, ord, s)) {
      res.discarded.push_back({amb, DiscardReason::NotQOrderCompatible});
      continue;
    }

    // Reduce stepwise, keeping intermediates only while they stay inside the
    // admissible set; on a violating step, adjoin the last valid form.
    std::vector<ReductionStep> steps;
    std::string note;
    bool became_zero = false;
    for (;;) {
      auto step = find_reduction_step(s, eng.monic(), eng.dm(), &ord);
      if (!step) break;
      const Polynomial next =
          s + step->lambda * (Polynomial::term(1, step->left) * eng.monic()[step->gen] *
                              Polynomial::term(1, step->right));
      if (next.is_zero()) {
        became_zero = true;
        break;
      }
      if (q.sigma(next).subset_of(sig_m) && is_q_order_compatible(q, ord, next)) {
        s = next;
        steps.push_back(std::move(*step));
      } else {
        note = "reduction stopped: a step by " + eng.name(step->gen) +
               " would violate the signature or Q-order conditions";
        break;
      }
    }
    if (became_zero) {
      res.discarded.push_back({amb, DiscardReason::ReducedToZero});
      continue;
    }

    if (res.added.size() >= cfg.max_new_elements) {
      res.pending.push_back(amb);
      break;
    }
    res.added.push_back(eng.adjoin(amb, s, steps, std::move(note)));
  }
  eng.drain_pending(res.pending);

  res.basis.assign(gens.begin(), gens.end());
  for (const auto& a : res.added) res.basis.push_back(Generator{a.name, a.poly});
  return res;
}

BuchbergerResult buchberger(std::span<const Generator> gens, const MonomialOrder& ord,
                            const CompletionConfig& cfg) {
  if (gens.empty()) throw input_error("empty generating set");

  BuchbergerResult res;
  res.input_count = gens.size();
  Engine eng(gens, ord, cfg.max_source_degree, nullptr);

  while (!eng.queue_empty()) {
    if (res.processed >= cfg.max_ambiguities) break;
    const Ambiguity amb = eng.pop();
    ++res.processed;

    auto [s, m] = s_polynomial(amb, eng.monic());
    ReduceOptions opts;
    opts.order = &ord;
    const ReduceResult rr = reduce(s, eng.monic(), eng.dm(), opts);
    if (rr.normal_form.is_zero()) continue;

    if (res.added.size() >= cfg.max_new_elements) {
      res.pending.push_back(amb);
      break;
    }
    res.added.push_back(eng.adjoin(amb, rr.normal_form, rr.trace.steps, ""));
    if (res.added.back().poly.is_constant()) {
      // The ideal contains a unit; further completion is pointless.
      res.constant_found = true;
      break;
    }
  }
  eng.drain_pending(res.pending);

  res.basis.assign(gens.begin(), gens.end());
  for (const auto& a : res.added) res.basis.push_back(Generator{a.name, a.poly});
  return res;
}

std::map<std::string, Certificate> basis_certificates(std::span<const Generator> basis,
                                                      std::size_t input_count,
                                                      std::span<const AddedElement> added) {
  std::map<std::string, Certificate> out;
  const std::vector<Generator> inputs(basis.begin(), basis.begin() + input_count);
  for (GenIndex i = 0; i < input_count; ++i) {
    Certificate c;
    c.claim = basis[i].poly;
    c.generators = inputs;
    c.terms = {CertTerm{Polynomial::one(), i, Polynomial::one()}};
    out.emplace(basis[i].name, std::move(c));
  }
  for (const auto& a : added) out.emplace(a.name, a.certificate);
  return out;
}

}  // namespace qgb
