#include "qgb/pipeline.hpp"

#include "qgb/error.hpp"
#include "qgb/parse.hpp"

namespace qgb {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "Proved";
    case Verdict::NotProved: return "NotProved";
    case Verdict::InputError: return "InputError";
  }
  return "?";
}

namespace {

Json signature_json(const LabelledQuiver& q, const Signature& s) {
  Json arr = Json::array();
  for (const auto& [u, v] : s.pairs()) arr.push_back({q.vertex_name(u), q.vertex_name(v)});
  return arr;
}

struct Context {
  const Problem& p;
  const CheckOptions& opts;
  const DegLexOrder ord;
  Report rep;

  explicit Context(const Problem& problem, const CheckOptions& options)
      : p(problem), opts(options), ord(problem.order()) {}

  const LabelledQuiver& quiver() const { return p.quiver; }
  const Alphabet& alphabet() const { return p.quiver.alphabet(); }

  std::string poly_str(const Polynomial& f) const { return format_poly(f, alphabet(), &ord); }

  Json reduction_json(const std::string& basis_name, const ReduceResult& rr) const {
    Json j;
    j["by"] = basis_name;
    j["steps"] = rr.trace.steps.size();
    j["normal_form"] = poly_str(rr.normal_form);
    return j;
  }

  /// Verifies cert, records the outcome, and settles the verdict. Returns
  /// true when this concludes the run with Proved.
  bool finish_with_certificate(Certificate cert, const std::string& route) {
    attach_witnesses(quiver(), cert, &ord);
    const VerifyResult vdef = verify_definition(quiver(), cert);
    VerifyResult vcrit;
    std::string crit_error;
    try {
      vcrit = verify_criterion(quiver(), cert.expanded() ? cert : expand_cofactors(cert));
    } catch (const error& e) {
      crit_error = e.what();
    }
    rep.body["route"] = route;
    Json jver;
    jver["definition"] = Json{{"ok", vdef.ok}};
    if (!vdef.ok) jver["definition"]["diagnostic"] = vdef.diagnostic;
    jver["criterion"] = Json{{"ok", vcrit.ok}};
    if (!vcrit.ok) jver["criterion"]["diagnostic"] = crit_error.empty() ? vcrit.diagnostic : crit_error;
    rep.body["verification"] = std::move(jver);

    const bool proved = vdef.ok && (!opts.require_criterion || vcrit.ok);
    if (proved) {
      rep.verdict = Verdict::Proved;
      rep.certificate = cert;
      rep.body["certificate"] = certificate_to_json(
          cert, alphabet(), opts.require_criterion ? "criterion" : "definition", &ord);
    } else {
      rep.verdict = Verdict::NotProved;
      rep.reason = opts.require_criterion && vdef.ok ? "criterion checker rejected the certificate"
                                                     : "certificate verification failed";
    }
    return proved;
  }

  void realization_check() {
    std::optional<std::filesystem::path> path = opts.representation;
    if (!path) path = p.representation_path;
    if (!path) return;
    Json jr;
    const Representation r = load_representation(*path, quiver());
    const ConsistencyVerdict verdict = check_consistency(quiver(), r, opts.consistency_max_len);
    switch (verdict.status) {
      case ConsistencyVerdict::Status::SufficientCondition: jr["consistency"] = "sufficient-condition"; break;
      case ConsistencyVerdict::Status::UpToLength:
        jr["consistency"] = "up-to-length-" + std::to_string(verdict.checked_length);
        break;
      case ConsistencyVerdict::Status::Inconsistent: jr["consistency"] = "inconsistent"; break;
      case ConsistencyVerdict::Status::Unknown: jr["consistency"] = "unknown"; break;
    }
    jr["detail"] = verdict.detail;
    if (verdict.status == ConsistencyVerdict::Status::Inconsistent ||
        (verdict.status == ConsistencyVerdict::Status::Unknown && !opts.assume_consistent)) {
      jr["evaluated"] = false;
      rep.body["realization"] = std::move(jr);
      return;
    }
    const Realizer realizer(quiver(), r, verdict, opts.assume_consistent);
    Json jassume = Json::array();
    for (const auto& g : p.assumptions) {
      Json ja;
      ja["name"] = g.name;
      ja["zero"] = quiver().is_compatible(g.poly) && realizer.verify_zero(g.poly);
      jassume.push_back(std::move(ja));
    }
    jr["assumptions"] = std::move(jassume);
    jr["claim_zero"] = realizer.verify_zero(p.claim);
    jr["evaluated"] = true;
    rep.body["realization"] = std::move(jr);
  }
};

}  // namespace

Report run_check(const Problem& p, const CheckOptions& opts) {
  Context ctx(p, opts);
  const LabelledQuiver& q = ctx.quiver();
  Json& body = ctx.rep.body;

  body["claim"] = ctx.poly_str(p.claim);
  {
    Json jo;
    jo["type"] = "deglex";
    Json prec = Json::array();
    for (const SymbolId x : p.precedence) prec.push_back(ctx.alphabet().name(x));
    jo["precedence"] = std::move(prec);
    body["order"] = std::move(jo);
  }

  // Compatibility and signatures, for the claim and every assumption.
  const CompatibilityInfo claim_info = q.compatibility(p.claim);
  bool all_q_order = true;
  {
    Json jc;
    jc["compatible"] = claim_info.compatible;
    jc["uniform"] = claim_info.uniform;
    jc["signature"] = signature_json(q, claim_info.signature);
    Json jas = Json::array();
    for (const auto& g : p.assumptions) {
      const CompatibilityInfo info = q.compatibility(g.poly);
      const bool qoc = !g.poly.is_zero() && is_q_order_compatible(q, ctx.ord, g.poly);
      all_q_order = all_q_order && qoc;
      Json ja;
      ja["name"] = g.name;
      ja["poly"] = ctx.poly_str(g.poly);
      ja["compatible"] = info.compatible;
      ja["uniform"] = info.uniform;
      ja["q_order_compatible"] = qoc;
      ja["signature"] = signature_json(q, info.signature);
      jas.push_back(std::move(ja));
    }
    Json jcomp;
    jcomp["claim"] = std::move(jc);
    jcomp["assumptions"] = std::move(jas);
    body["compatibility"] = std::move(jcomp);
  }
  body["unique_labels"] = q.has_unique_edge_labels();

  const auto conclude = [&](Verdict v, const std::string& reason) {
    ctx.rep.verdict = v;
    ctx.rep.reason = reason;
  };

  const auto emit_tail = [&]() -> Report {
    ctx.realization_check();
    body["verdict"] = to_string(ctx.rep.verdict);
    if (!ctx.rep.reason.empty()) body["reason"] = ctx.rep.reason;
    return std::move(ctx.rep);
  };

  if (!claim_info.compatible) {
    conclude(Verdict::NotProved, "claim not compatible with quiver");
    return emit_tail();
  }

  std::vector<Polynomial> assumption_polys;
  for (const auto& g : p.assumptions) assumption_polys.push_back(g.poly);

  // Unique-label route: plain Buchberger is enough as long as the basis stays
  // clear of constants.
  if (!p.assumptions.empty() && body["unique_labels"].get<bool>() && !p.dm) {
    const BuchbergerResult bb = buchberger(p.assumptions, ctx.ord, p.completion);
    bool constant = bb.constant_found;
    for (const auto& g : bb.basis)
      constant = constant || (!g.poly.is_zero() && g.poly.is_constant());
    Json jb;
    jb["added"] = bb.added.size();
    jb["constant_found"] = constant;
    jb["processed"] = bb.processed;
    jb["pending"] = bb.pending.size();
    body["buchberger"] = std::move(jb);
    if (!constant) {
      const ReduceResult rr = reduce(p.claim, bb.basis_polys(), ctx.ord);
      body["reduction"] = ctx.reduction_json("buchberger basis", rr);
      if (rr.normal_form.is_zero()) {
        const Certificate over_basis = certificate_from_trace(p.claim, rr.trace, bb.basis);
        Certificate cert = compose_certificates(
            over_basis, basis_certificates(bb.basis, bb.input_count, bb.added));
        if (ctx.finish_with_certificate(std::move(cert), "unique-label buchberger"))
          return emit_tail();
      } else {
        conclude(Verdict::NotProved, "normal form is nonzero");
      }
    }
    if (ctx.rep.verdict != Verdict::Proved && ctx.rep.reason.empty())
      conclude(Verdict::NotProved, "unique-label route inconclusive");
    return emit_tail();
  }

  // Direct reduction by the assumptions, with the divisor override when given.
  if (p.assumptions.empty()) {
    conclude(Verdict::NotProved, "no assumptions to reduce by");
    return emit_tail();
  }
  const DivisorMap dm =
      p.dm ? *p.dm : DivisorMap::leading_monomials(assumption_polys, ctx.ord);
  body["dm_compatible"] = dm_compatible(q, assumption_polys, dm);
  ReduceOptions ropts;
  ropts.order = &ctx.ord;
  std::optional<ReduceResult> rr;
  try {
    rr = reduce(p.claim, assumption_polys, dm, ropts);
  } catch (const limit_error& e) {
    body["reduction"] = Json{{"by", "assumptions"}, {"error", e.what()}};
    conclude(Verdict::NotProved, "rewriting cap exceeded");
    return emit_tail();
  }
  body["reduction"] = ctx.reduction_json("assumptions", *rr);

  if (rr->normal_form.is_zero()) {
    Certificate cert = certificate_from_trace(p.claim, rr->trace, p.assumptions);
    ctx.finish_with_certificate(std::move(cert), "direct reduction");
    return emit_tail();
  }

  // Completion needs every assumption Q-order compatible and the plain
  // leading-monomial divisor choice.
  if (!all_q_order || p.dm) {
    conclude(Verdict::NotProved, !all_q_order
                                     ? "normal form is nonzero and the assumptions are not all "
                                       "Q-order compatible, so completion does not apply"
                                     : "normal form is nonzero under the divisor override");
    return emit_tail();
  }

  const CompletionResult comp = q_complete(q, p.assumptions, ctx.ord, p.completion);
  {
    Json jc;
    Json jadded = Json::array();
    for (const auto& a : comp.added) {
      Json ja;
      ja["name"] = a.name;
      ja["poly"] = ctx.poly_str(a.poly);
      ja["source"] = format_monomial(a.origin.source, ctx.alphabet());
      ja["from"] = Json::array({comp.basis.at(a.origin.g).name, comp.basis.at(a.origin.g2).name});
      if (!a.note.empty()) ja["note"] = a.note;
      jadded.push_back(std::move(ja));
    }
    jc["added"] = std::move(jadded);
    Json jdisc = Json::array();
    for (const auto& [amb, reason] : comp.discarded) {
      Json jd;
      jd["source"] = format_monomial(amb.source, ctx.alphabet());
      jd["reason"] = to_string(reason);
      jdisc.push_back(std::move(jd));
    }
    jc["discarded"] = std::move(jdisc);
    jc["processed"] = comp.processed;
    jc["pending"] = comp.pending.size();
    body["completion"] = std::move(jc);
  }

  const ReduceResult rr2 = reduce(p.claim, comp.basis_polys(), ctx.ord);
  body["reduction_after_completion"] = ctx.reduction_json("completed basis", rr2);
  if (rr2.normal_form.is_zero()) {
    const Certificate over_basis = certificate_from_trace(p.claim, rr2.trace, comp.basis);
    Certificate cert = compose_certificates(
        over_basis, basis_certificates(comp.basis, comp.input_count, comp.added));
    ctx.finish_with_certificate(std::move(cert), "completion");
    return emit_tail();
  }
  conclude(Verdict::NotProved, "normal form is nonzero after completion");
  return emit_tail();
}

}  // namespace qgb
