#include <doctest.h>

#include "qgb/completion.hpp"
#include "qgb/error.hpp"
#include "support.hpp"

using namespace qgb;
using qtest::RunningExample;

namespace {

/// The reduction certificate of the running example under the d-greatest
/// order, with the hand-picked witnesses.
Certificate example_certificate(const RunningExample& ex) {
  const DegLexOrder dlex = ex.d_greatest_order();
  const ReduceResult rr = reduce(ex.claim, ex.assumption_polys(), dlex);
  REQUIRE(rr.normal_form.is_zero());
  Certificate cert = certificate_from_trace(ex.claim, rr.trace, ex.assumptions);
  cert.witnesses[0] = ex.mono("d*h1");
  cert.witnesses[1] = ex.mono("h2*d");
  cert.witnesses[2] = ex.mono("h1*th1");
  cert.witnesses[3] = ex.mono("h2*th2");
  cert.witnesses[4] = ex.mono("d*i");
  return cert;
}

}  // namespace

TEST_CASE("certificates from traces") {
  const RunningExample ex;
  const Certificate cert = example_certificate(ex);
  CHECK(cert.terms.size() == 9);
  CHECK(cert.expanded());
  CHECK(certificate_expansion(cert) == ex.claim);

  const Certificate empty = certificate_from_trace(Polynomial::zero(), ReductionTrace{},
                                                   ex.assumptions);
  CHECK(empty.terms.empty());
  CHECK(verify_definition(ex.quiver, empty).ok);

  ReductionTrace bad;
  bad.final = Polynomial::one();
  CHECK_THROWS_AS(certificate_from_trace(ex.claim, bad, ex.assumptions), error);
}

TEST_CASE("verify_definition on the running example") {
  const RunningExample ex;
  const Certificate cert = example_certificate(ex);
  CHECK(verify_definition(ex.quiver, cert).ok);

  // Swapping two generators breaks the exact expansion.
  Certificate swapped = cert;
  std::swap(swapped.generators[2].poly, swapped.generators[3].poly);
  const auto res = verify_definition(ex.quiver, swapped);
  CHECK_FALSE(res.ok);
  CHECK(res.diagnostic.find("expansion") != std::string::npos);

  // An incompatible claim is rejected before any signature test.
  Certificate incompatible = cert;
  incompatible.claim = ex.poly("d*h1 + h2");
  incompatible.terms = {CertTerm{Polynomial::one(), 0, Polynomial::one()}};
  incompatible.generators[0].poly = incompatible.claim;
  const auto res2 = verify_definition(ex.quiver, incompatible);
  CHECK_FALSE(res2.ok);
  CHECK(res2.diagnostic.find("not compatible") != std::string::npos);
}

TEST_CASE("signature witnesses cover every term and pair") {
  const RunningExample ex;
  const Certificate cert = example_certificate(ex);
  const auto witnesses = definition_witnesses(ex.quiver, cert);
  // One pair in sigma(claim), witnessed for each of the 9 terms.
  REQUIRE(witnesses.size() == cert.terms.size());
  for (const auto& w : witnesses) {
    CHECK(ex.quiver.vertex_name(w.u) == "v3");
    CHECK(ex.quiver.vertex_name(w.v) == "v3");
    const auto& t = cert.terms[w.term];
    CHECK(ex.quiver.sigma(t.right).test(w.u, w.ui));
    CHECK(ex.quiver.sigma(cert.generators[t.gen].poly).test(w.ui, w.vi));
    CHECK(ex.quiver.sigma(t.left).test(w.vi, w.v));
  }
}

TEST_CASE("verify_criterion on the running example") {
  const RunningExample ex;
  const Certificate cert = example_certificate(ex);
  const VerifyResult res = verify_criterion(ex.quiver, cert);
  CHECK(res.ok);
  REQUIRE(res.term_signatures.size() == 9);
  for (const auto& s : res.term_signatures) CHECK(s == ex.sig({{"v3", "v3"}}));

  // A witness whose signature exceeds the generator's is rejected.
  Certificate bad_witness = cert;
  bad_witness.witnesses[1] = ex.mono("d*h2");
  const auto res2 = verify_criterion(ex.quiver, bad_witness);
  CHECK_FALSE(res2.ok);
  CHECK(res2.diagnostic.find("f2") != std::string::npos);

  // A cofactor pointing elsewhere breaks the containment.
  Certificate bad_term = cert;
  bad_term.terms[0].left = Polynomial::term(1, ex.mono("i"));
  bad_term.claim = certificate_expansion(bad_term);  // keep the sum exact
  if (ex.quiver.is_compatible(bad_term.claim)) {
    const auto res3 = verify_criterion(ex.quiver, bad_term);
    CHECK_FALSE(res3.ok);
  }

  // Grouped cofactors are not acceptable input for the criterion.
  const Certificate grouped = group_terms(cert);
  CHECK_THROWS_AS(verify_criterion(ex.quiver, grouped), error);

  // Missing witnesses are a verification failure with a diagnostic.
  Certificate no_witness = cert;
  no_witness.witnesses.clear();
  const auto res4 = verify_criterion(ex.quiver, no_witness);
  CHECK_FALSE(res4.ok);
  CHECK(res4.diagnostic.find("witness") != std::string::npos);
}

TEST_CASE("automatic witness selection prefers the leading monomial") {
  const RunningExample ex;
  const DegLexOrder comp = ex.completion_order();
  const ReduceResult rr = reduce(ex.claim, ex.assumption_polys(), ex.d_greatest_order());
  Certificate cert = certificate_from_trace(ex.claim, rr.trace, ex.assumptions);
  attach_witnesses(ex.quiver, cert, &comp);
  // Under the completion order every leading monomial has the generator's
  // signature, so all witnesses are the leading monomials.
  CHECK(cert.witnesses.at(0) == ex.mono("d*h1"));
  CHECK(cert.witnesses.at(1) == ex.mono("h2*d"));
  CHECK(cert.witnesses.at(2) == ex.mono("h1*th1"));
  CHECK(cert.witnesses.at(3) == ex.mono("h2*th2"));
  CHECK(cert.witnesses.at(4) == ex.mono("d*i"));
  CHECK(verify_criterion(ex.quiver, cert).ok);

  // Under the d-greatest order LM(f2) = d*h2 does not qualify; the qualifying
  // support monomial h2*d is chosen instead.
  Certificate cert2 = certificate_from_trace(ex.claim, rr.trace, ex.assumptions);
  const DegLexOrder dlex = ex.d_greatest_order();
  attach_witnesses(ex.quiver, cert2, &dlex);
  CHECK(cert2.witnesses.at(1) == ex.mono("h2*d"));
}

TEST_CASE("criterion acceptance implies definition acceptance") {
  qtest::Rng rng(51);
  int accepted = 0;
  for (int it = 0; it < 250; ++it) {
    const auto inst = qtest::random_unique_label_instance(rng);
    if (inst.generators.empty()) continue;
    const Polynomial f = qtest::random_combination(rng, inst.quiver, inst.generators);
    if (f.is_zero() || !inst.quiver.is_compatible(f)) continue;

    std::vector<Polynomial> polys;
    for (const auto& g : inst.generators) polys.push_back(g.poly);
    std::vector<SymbolId> prec;
    for (SymbolId x = 0; x < inst.quiver.alphabet().size(); ++x) prec.push_back(x);
    const DegLexOrder ord(inst.quiver.alphabet(), prec);
    const ReduceResult rr = reduce(f, polys, ord);
    if (!rr.normal_form.is_zero()) continue;

    Certificate cert = certificate_from_trace(f, rr.trace, inst.generators);
    attach_witnesses(inst.quiver, cert, &ord);
    VerifyResult crit;
    try {
      crit = verify_criterion(inst.quiver, cert);
    } catch (const error&) {
      continue;
    }
    if (crit.ok) {
      CHECK(verify_definition(inst.quiver, cert).ok);
      ++accepted;
    }
  }
  CHECK(accepted >= 25);
}

TEST_CASE("certificate composition") {
  const RunningExample ex;
  const DegLexOrder comp = ex.completion_order();
  const CompletionResult res = q_complete(ex.quiver, ex.assumptions, comp);
  REQUIRE(res.added.size() == 1);

  const ReduceResult rr = reduce(ex.claim, res.basis_polys(), comp);
  REQUIRE(rr.normal_form.is_zero());
  const Certificate over_basis = certificate_from_trace(ex.claim, rr.trace, res.basis);
  const Certificate composed = compose_certificates(
      over_basis, basis_certificates(res.basis, res.input_count, res.added));
  CHECK(verify_definition(ex.quiver, composed).ok);
  CHECK(certificate_expansion(composed) == ex.claim);
  for (const auto& t : composed.terms) CHECK(t.gen < ex.assumptions.size());

  // The composed representation coincides with the direct d-greatest one.
  const Certificate direct = certificate_from_trace(
      ex.claim, reduce(ex.claim, ex.assumption_polys(), ex.d_greatest_order()).trace,
      ex.assumptions);
  CHECK(group_terms(composed).terms == group_terms(direct).terms);

  // Trivial inner certificates keep the outer representation.
  std::map<std::string, Certificate> trivial;
  for (GenIndex i = 0; i < ex.assumptions.size(); ++i) {
    Certificate c;
    c.claim = ex.assumptions[i].poly;
    c.generators = ex.assumptions;
    c.terms = {CertTerm{Polynomial::one(), i, Polynomial::one()}};
    trivial.emplace(ex.assumptions[i].name, std::move(c));
  }
  const Certificate direct_composed = compose_certificates(direct, trivial);
  CHECK(direct_composed.terms == direct.terms);

  // A missing inner certificate is an error.
  std::map<std::string, Certificate> missing = trivial;
  missing.erase("f3");
  CHECK_THROWS_AS(compose_certificates(direct, missing), error);
}
