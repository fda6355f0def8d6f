#include <doctest.h>

#include "qgb/error.hpp"
#include "support.hpp"

using namespace qgb;
using qtest::RunningExample;

TEST_CASE("edge relations of the running example") {
  const RunningExample ex;
  CHECK(ex.quiver.edge_relation(ex.alphabet().require("d")) ==
        ex.sig({{"v1", "v2"}, {"v2", "v3"}}));
  CHECK(ex.quiver.edge_relation(ex.alphabet().require("th1")) == ex.sig({{"v3", "v3"}}));
  CHECK_THROWS_AS(ex.quiver.edge_relation(static_cast<SymbolId>(99)), input_error);

  // A declared symbol without edges has an empty relation.
  Alphabet a;
  a.intern("x");
  a.intern("y");
  LabelledQuiver q(a, {"w"});
  q.add_edge(0, 0, a.require("x"));
  CHECK(q.edge_relation(a.require("y")).empty());
}

TEST_CASE("relation composition") {
  const RunningExample ex;
  const Signature rel_d = ex.quiver.edge_relation(ex.alphabet().require("d"));
  const Signature rel_i = ex.quiver.edge_relation(ex.alphabet().require("i"));
  CHECK(compose(rel_d, rel_i) == ex.sig({{"v2", "v2"}, {"v3", "v3"}}));
  CHECK(compose(Signature::diagonal(3), rel_d) == rel_d);
  CHECK(compose(Signature(3), rel_d).empty());
  CHECK(compose(rel_d, Signature(3)).empty());
}

TEST_CASE("sigma of monomials") {
  const RunningExample ex;
  CHECK(ex.quiver.sigma(Monomial::one()) ==
        ex.sig({{"v1", "v1"}, {"v2", "v2"}, {"v3", "v3"}}));
  CHECK(ex.quiver.sigma(ex.mono("h2*i*th2*h1*i*th1")) == ex.sig({{"v3", "v1"}}));
  CHECK(ex.quiver.sigma(ex.mono("d*h1")) == ex.sig({{"v2", "v3"}}));
  CHECK(ex.quiver.sigma(ex.mono("h1*d")) == ex.sig({{"v1", "v2"}, {"v2", "v3"}}));
  CHECK(ex.quiver.sigma(ex.mono("d*h2")) == ex.sig({{"v1", "v2"}, {"v2", "v3"}}));
  CHECK(ex.quiver.sigma(ex.mono("h2*d")) == ex.sig({{"v1", "v2"}}));
}

TEST_CASE("sigma of polynomials") {
  const RunningExample ex;
  CHECK(ex.quiver.sigma(ex.poly("d*i - 1")) == ex.sig({{"v2", "v2"}, {"v3", "v3"}}));
  CHECK(ex.quiver.sigma(Polynomial::zero()) == Signature::full(3));
  CHECK(ex.quiver.sigma(ex.claim) == ex.sig({{"v3", "v3"}}));
}

TEST_CASE("compatibility and the uniform flag") {
  const RunningExample ex;
  const auto f1 = ex.quiver.compatibility(ex.assumptions[0].poly);
  CHECK(f1.compatible);
  // h1*d has signature {(v1,v2),(v2,v3)} while d*h1 has {(v2,v3)}: the
  // monomial signatures differ, so f1 is compatible but not uniformly so.
  CHECK_FALSE(f1.uniform);
  CHECK(f1.signature == ex.sig({{"v2", "v3"}}));

  CHECK_FALSE(ex.quiver.is_compatible(ex.poly("d*h1 + h2")));

  const auto unit = ex.quiver.compatibility(Polynomial::one());
  CHECK(unit.compatible);
  CHECK(unit.uniform);

  const auto f3 = ex.quiver.compatibility(ex.poly("h1*th1 - 1"));
  CHECK(f3.compatible);
  CHECK_FALSE(f3.uniform);  // sigma(h1*th1) = {(v3,v3)} but sigma(1) is the diagonal
}

TEST_CASE("unique edge labels") {
  const RunningExample ex;
  CHECK_FALSE(ex.quiver.has_unique_edge_labels());

  Alphabet a;
  a.intern("p");
  a.intern("q");
  LabelledQuiver pq(a, {"w1", "w2"});
  pq.add_edge(0, 1, a.require("p"));
  pq.add_edge(1, 0, a.require("q"));
  CHECK(pq.has_unique_edge_labels());

  LabelledQuiver edgeless(a, {"w"});
  CHECK(edgeless.has_unique_edge_labels());
}

TEST_CASE("sigma agrees with brute-force path enumeration") {
  qtest::Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    const LabelledQuiver q = qtest::random_quiver(rng, 5, 12, 4);
    for (int w = 0; w < 8; ++w) {
      const Monomial m = qtest::random_word(rng, 4, 6);
      CHECK(q.sigma(m) == qtest::sigma_bruteforce(q, m));
    }
  }
}

TEST_CASE("sigma splits along concatenation") {
  qtest::Rng rng(12);
  for (int it = 0; it < 60; ++it) {
    const LabelledQuiver q = qtest::random_quiver(rng, 5, 12, 4);
    const Monomial m1 = qtest::random_word(rng, 4, 4);
    const Monomial m2 = qtest::random_word(rng, 4, 4);
    CHECK(q.sigma(m1 * m2) == compose(q.sigma(m1), q.sigma(m2)));
  }
}

TEST_CASE("signature bounds for sums and products") {
  qtest::Rng rng(13);
  int sums = 0, products = 0;
  for (int it = 0; it < 400 && (sums < 40 || products < 40); ++it) {
    const LabelledQuiver q = qtest::random_quiver(rng, 4, 10, 3);
    const Polynomial f = qtest::random_poly(rng, 3, 3, 3);
    const Polynomial g = qtest::random_poly(rng, 3, 3, 3);
    if (!q.is_compatible(f) || !q.is_compatible(g)) continue;
    const Signature meet = q.sigma(f) & q.sigma(g);
    if (!meet.empty()) {
      CHECK(meet.subset_of(q.sigma(f + g)));
      ++sums;
    }
    const Signature chain = compose(q.sigma(f), q.sigma(g));
    if (!chain.empty()) {
      CHECK(chain.subset_of(q.sigma(f * g)));
      ++products;
    }
  }
  CHECK(sums >= 40);
  CHECK(products >= 40);
}
