#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgb/order.hpp"
#include "qgb/polynomial.hpp"
#include "qgb/quiver.hpp"
#include "qgb/rewrite.hpp"

namespace qgb {

struct Generator {
  std::string name;
  Polynomial poly;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct CertTerm {
  Polynomial left;
  GenIndex gen;
  Polynomial right;
  friend bool operator==(const CertTerm&, const CertTerm&) = default;
};

/// A representation claim = Σ left·g·right over named generators, with
/// optional per-generator witness monomials for the criterion checker.
struct Certificate {
  Polynomial claim;
  std::vector<Generator> generators;
  std::vector<CertTerm> terms;
  std::map<GenIndex, Monomial> witnesses;

  /// Every cofactor is a scalar multiple of a single monomial.
  bool expanded() const;
  std::optional<GenIndex> find_generator(const std::string& name) const;
};

/// Σ left·g·right, by exact arithmetic.
Polynomial certificate_expansion(const Certificate& cert);

/// Turns a reduction-to-zero trace into terms (−λᵢ·aᵢ, gᵢ, bᵢ).
/// Error when trace.final is nonzero.
Certificate certificate_from_trace(const Polynomial& claim, const ReductionTrace& trace,
                                   std::span<const Generator> gens);

/// One term per (left monomial, right monomial) pair of every grouped term.
Certificate expand_cofactors(const Certificate& cert);

/// Merges expanded terms with equal (generator, right cofactor), summing the
/// left cofactors; zero groups are dropped.
Certificate group_terms(const Certificate& cert);

/// Chooses, for every used generator, a support monomial m with σ(m) = σ(g),
/// preferring the leading monomial when it qualifies. Generators with no such
/// monomial are left without a witness.
void attach_witnesses(const LabelledQuiver& q, Certificate& cert,
                      const MonomialOrder* ord = nullptr);

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;  // first failing term / vertex pair when !ok
  /// Filled by verify_criterion: σ(aᵢ·m_gᵢ·bᵢ) per term.
  std::vector<Signature> term_signatures;
  explicit operator bool() const { return ok; }
};

/// Checks the defining conditions: the claim is compatible, the expansion is
/// exact, and every (u,v) in σ(claim) factors through every term as
/// (u,uᵢ) ∈ σ(right), (uᵢ,vᵢ) ∈ σ(gen), (vᵢ,v) ∈ σ(left).
VerifyResult verify_definition(const LabelledQuiver& q, const Certificate& cert);

/// Criterion checker: requires expanded cofactors (error otherwise) and a
/// witness m_g with m_g ∈ supp(g), σ(m_g) = σ(g) for every used generator;
/// accepts iff additionally σ(claim) ⊆ σ(aᵢ·m_gᵢ·bᵢ) for every term.
VerifyResult verify_criterion(const LabelledQuiver& q, const Certificate& cert);

/// Substitutes an inner representation (over a common base) for every
/// generator of outer: h = ΣΣ aᵢaᵢⱼ fᵢⱼ bᵢⱼbᵢ. Every generator of outer must
/// map to an inner certificate whose claim equals it.
Certificate compose_certificates(const Certificate& outer,
                                 const std::map<std::string, Certificate>& inner);

/// Vertices (uᵢ, vᵢ) witnessing the definition for one term at one pair, if any.
std::optional<std::pair<VertexId, VertexId>> find_signature_witness(const LabelledQuiver& q,
                                                                    const Certificate& cert,
                                                                    std::size_t term, VertexId u,
                                                                    VertexId v);

/// One factorization witness per (term, pair in σ(claim)): paths for the
/// right cofactor (u -> ui), the generator (ui -> vi) and the left cofactor
/// (vi -> v) exist. Complete exactly when the definition checker accepts.
struct SignatureWitness {
  std::size_t term;
  VertexId u, v;
  VertexId ui, vi;
};
std::vector<SignatureWitness> definition_witnesses(const LabelledQuiver& q,
                                                   const Certificate& cert);

}  // namespace qgb
