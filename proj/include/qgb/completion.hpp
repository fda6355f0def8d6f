#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qgb/certificate.hpp"
#include "qgb/order.hpp"
#include "qgb/polynomial.hpp"
#include "qgb/quiver.hpp"

namespace qgb {

/// A minimal overlap or inclusion of two leading monomials:
/// a·LM(g)·b = a2·LM(g2)·b2 = source.
struct Ambiguity {
  GenIndex g = 0;
  GenIndex g2 = 0;
  Monomial a, b, a2, b2;
  Monomial source;
  friend bool operator==(const Ambiguity&, const Ambiguity&) = default;
};

/// All overlap and inclusion ambiguities between two leading monomials, in
/// both orientations, deduplicated. The trivial self-inclusion of a word in
/// itself at the identical occurrence is excluded.
std::vector<Ambiguity> ambiguities(const Monomial& lm_g, const Monomial& lm_g2, GenIndex id_g,
                                   GenIndex id_g2);

/// Convenience overload on polynomials; indices are 0 and (g == g2 ? 0 : 1).
std::vector<Ambiguity> ambiguities(const Polynomial& g, const Polynomial& g2,
                                   const MonomialOrder& ord);

/// SP(amb) = a·g·b − a2·g2·b2 together with the source. The source monomial
/// cancels. Errors when a referenced generator is not monic.
std::pair<Polynomial, Monomial> s_polynomial(const Ambiguity& amb,
                                             std::span<const Polynomial> gens);

struct CompletionConfig {
  std::size_t max_new_elements = 64;
  std::size_t max_ambiguities = 5000;
  std::optional<std::size_t> max_source_degree;
};

enum class DiscardReason {
  SourceIncompatible,
  SignatureNotContained,  // σ(s) not contained in σ(source)
  NotQOrderCompatible,
  ReducedToZero,
  SourceDegreeBound,
};

std::string to_string(DiscardReason r);

struct AddedElement {
  std::string name;
  Polynomial poly;  // monic
  Ambiguity origin;
  Certificate certificate;  // over the input generators
  std::string note;         // e.g. the rewrite step at which reduction had to stop
};

struct CompletionResult {
  /// Input generators as given, followed by the added elements (monic).
  std::vector<Generator> basis;
  std::size_t input_count = 0;
  std::vector<AddedElement> added;
  std::vector<std::pair<Ambiguity, DiscardReason>> discarded;
  std::vector<Ambiguity> pending;  // enqueued but not processed before a bound hit
  std::size_t processed = 0;
  /// Compatible-source S-polynomials checked against σ(source) ⊆ σ(s).
  std::size_t spoly_signature_checks = 0;

  std::vector<Polynomial> basis_polys() const;
};

/// Q-order compatible completion. Every input generator must be nonzero and
/// Q-order compatible (input_error listing offenders otherwise); generators
/// are normalized monic internally. Each adjoined element is Q-order
/// compatible and carries a certificate over the input generators.
CompletionResult q_complete(const LabelledQuiver& q, std::span<const Generator> gens,
                            const MonomialOrder& ord, const CompletionConfig& cfg = {});

struct BuchbergerResult {
  std::vector<Generator> basis;
  std::size_t input_count = 0;
  std::vector<AddedElement> added;
  bool constant_found = false;
  std::vector<Ambiguity> pending;
  std::size_t processed = 0;

  std::vector<Polynomial> basis_polys() const;
};

/// Standard noncommutative Buchberger procedure, bounded by cfg: S-polynomials
/// are fully reduced and nonzero normal forms adjoined monic. Stops once a
/// nonzero constant is produced (constant_found). No quiver is consulted.
BuchbergerResult buchberger(std::span<const Generator> gens, const MonomialOrder& ord,
                            const CompletionConfig& cfg = {});

/// Certificates over the input generators for every basis element: trivial
/// ones for the inputs themselves, tracked ones for added elements. Keyed by
/// basis element name; suitable as the inner map of compose_certificates.
std::map<std::string, Certificate> basis_certificates(std::span<const Generator> basis,
                                                      std::size_t input_count,
                                                      std::span<const AddedElement> added);

}  // namespace qgb
