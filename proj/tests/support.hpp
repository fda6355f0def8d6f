#pragma once

#include <random>
#include <string>
#include <vector>

#include "qgb/certificate.hpp"
#include "qgb/matrix.hpp"
#include "qgb/order.hpp"
#include "qgb/parse.hpp"
#include "qgb/polynomial.hpp"
#include "qgb/quiver.hpp"

namespace qtest {

/// The ODE-factorization example: three vertices, twelve edges, assumptions
/// f1..f5 and the nested-integral claim.
struct RunningExample {
  qgb::LabelledQuiver quiver;
  std::vector<qgb::Generator> assumptions;
  qgb::Polynomial claim;

  RunningExample();

  const qgb::Alphabet& alphabet() const { return quiver.alphabet(); }

  /// deglex with d greatest: d > b1 > b2 > h1 > h2 > th1 > th2 > i.
  qgb::DegLexOrder d_greatest_order() const;

  /// deglex with h2 > b2 > d > b1 > h1 > th1 > th2 > i.
  qgb::DegLexOrder completion_order() const;

  std::vector<qgb::Polynomial> assumption_polys() const;

  qgb::Polynomial poly(const std::string& text) const {
    return qgb::parse_poly(text, alphabet());
  }
  qgb::Monomial mono(const std::string& text) const {
    return qgb::parse_monomial(text, alphabet());
  }

  /// Signature from vertex-name pairs, e.g. sig({{"v2","v3"}}).
  qgb::Signature sig(const std::vector<std::pair<std::string, std::string>>& pairs) const;
};

/// Independent σ oracle: depth-first enumeration of all labelled paths.
qgb::Signature sigma_bruteforce(const qgb::LabelledQuiver& q, const qgb::Monomial& m);

/// All splittings m = a·d·b found by scanning every (|a|, |b|) pair.
std::vector<std::pair<qgb::Monomial, qgb::Monomial>> divisions_bruteforce(const qgb::Monomial& m,
                                                                          const qgb::Monomial& d);

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
  }
  int range(int lo, int hi) { return static_cast<int>(lo + below(hi - lo + 1)); }
  bool chance(double p) { return std::uniform_real_distribution<>(0.0, 1.0)(eng) < p; }
  qgb::Rational coefficient() {
    static const int nums[] = {-3, -2, -1, 1, 2, 3};
    if (chance(0.2)) return qgb::Rational(nums[below(6)], 2);
    return qgb::Rational(nums[below(6)]);
  }
};

qgb::Monomial random_word(Rng& rng, std::size_t alphabet_size, std::size_t max_len);
qgb::Polynomial random_poly(Rng& rng, std::size_t alphabet_size, std::size_t max_terms,
                            std::size_t max_len);

qgb::LabelledQuiver random_quiver(Rng& rng, std::size_t max_vertices, std::size_t max_edges,
                                  std::size_t alphabet_size);

/// A random quiver whose edges all carry distinct labels (one fresh symbol per
/// edge), plus compatible generators built from its paths.
struct UniqueLabelInstance {
  qgb::LabelledQuiver quiver;
  std::vector<qgb::Generator> generators;
};
UniqueLabelInstance random_unique_label_instance(Rng& rng);

/// A random combination Σ aᵢ·gᵢ·bᵢ with monomial cofactors chosen along paths
/// of the quiver so the sum has a chance of being compatible.
qgb::Polynomial random_combination(Rng& rng, const qgb::LabelledQuiver& q,
                                   const std::vector<qgb::Generator>& gens);

/// Exact inverse by Gauss-Jordan elimination; empty result when singular.
std::optional<qgb::RatMatrix> invert(const qgb::RatMatrix& m);

}  // namespace qtest
