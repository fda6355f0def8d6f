#include "qgb/certificate.hpp"

#include <algorithm>
#include <set>

#include "qgb/error.hpp"

namespace qgb {

namespace {

bool is_scalar_monomial(const Polynomial& f) { return f.term_count() == 1; }

std::string pair_str(const LabelledQuiver& q, VertexId u, VertexId v) {
  return "(" + q.vertex_name(u) + "," + q.vertex_name(v) + ")";
}

}  // namespace

bool Certificate::expanded() const {
  for (const auto& t : terms)
    if (!is_scalar_monomial(t.left) || !is_scalar_monomial(t.right)) return false;
  return true;
}

std::optional<GenIndex> Certificate::find_generator(const std::string& name) const {
  for (GenIndex i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return i;
  return std::nullopt;
}

Polynomial certificate_expansion(const Certificate& cert) {
  Polynomial sum;
  for (const auto& t : cert.terms) {
    if (t.gen >= cert.generators.size()) throw error("certificate references an unknown generator");
    sum += t.left * cert.generators[t.gen].poly * t.right;
  }
  return sum;
}

Certificate certificate_from_trace(const Polynomial& claim, const ReductionTrace& trace,
                                   std::span<const Generator> gens) {
  if (!trace.final.is_zero()) throw error("trace does not end at zero");
  Certificate cert;
  cert.claim = claim;
  cert.generators.assign(gens.begin(), gens.end());
  for (const auto& step : trace.steps) {
    if (step.gen >= gens.size()) throw error("trace references an unknown generator");
    cert.terms.push_back(CertTerm{Polynomial::term(-step.lambda, step.left), step.gen,
                                  Polynomial::term(1, step.right)});
  }
  return cert;
}

Certificate expand_cofactors(const Certificate& cert) {
  Certificate out;
  out.claim = cert.claim;
  out.generators = cert.generators;
  out.witnesses = cert.witnesses;
  for (const auto& t : cert.terms) {
    for (const auto& [ma, ca] : t.left.terms())
      for (const auto& [mb, cb] : t.right.terms())
        out.terms.push_back(
            CertTerm{Polynomial::term(ca * cb, ma), t.gen, Polynomial::term(1, mb)});
  }
  return out;
}

Certificate group_terms(const Certificate& cert) {
  if (!cert.expanded()) throw error("grouping requires expanded cofactors");
  std::map<std::pair<GenIndex, Monomial>, Polynomial> groups;
  for (const auto& t : cert.terms) {
    const auto& [mb, cb] = *t.right.terms().begin();
    groups[{t.gen, mb}] += cb * t.left;
  }
  Certificate out;
  out.claim = cert.claim;
  out.generators = cert.generators;
  out.witnesses = cert.witnesses;
  for (const auto& [key, left] : groups) {
    if (left.is_zero()) continue;
    out.terms.push_back(CertTerm{left, key.first, Polynomial::term(1, key.second)});
  }
  return out;
}

void attach_witnesses(const LabelledQuiver& q, Certificate& cert, const MonomialOrder* ord) {
  std::set<GenIndex> used;
  for (const auto& t : cert.terms) used.insert(t.gen);
  for (const GenIndex gi : used) {
    const Polynomial& g = cert.generators[gi].poly;
    if (g.is_zero()) continue;
    const Signature sg = q.sigma(g);
    std::vector<Monomial> candidates;
    if (ord) candidates.push_back(leading_monomial(*ord, g));
    for (const auto& m : g.support()) candidates.push_back(m);
    for (const auto& m : candidates) {
      if (q.sigma(m) == sg) {
        cert.witnesses[gi] = m;
        break;
      }
    }
  }
}

std::optional<std::pair<VertexId, VertexId>> find_signature_witness(const LabelledQuiver& q,
                                                                    const Certificate& cert,
                                                                    std::size_t term, VertexId u,
                                                                    VertexId v) {
  const auto& t = cert.terms.at(term);
  const Signature sl = q.sigma(t.left);
  const Signature sg = q.sigma(cert.generators.at(t.gen).poly);
  const Signature sr = q.sigma(t.right);
  for (VertexId ui = 0; ui < q.vertex_count(); ++ui) {
    if (!sr.test(u, ui)) continue;
    for (VertexId vi = 0; vi < q.vertex_count(); ++vi)
      if (sg.test(ui, vi) && sl.test(vi, v)) return std::make_pair(ui, vi);
  }
  return std::nullopt;
}

std::vector<SignatureWitness> definition_witnesses(const LabelledQuiver& q,
                                                   const Certificate& cert) {
  std::vector<SignatureWitness> out;
  const auto pairs = q.sigma(cert.claim).pairs();
  for (std::size_t i = 0; i < cert.terms.size(); ++i) {
    for (const auto& [u, v] : pairs) {
      if (const auto w = find_signature_witness(q, cert, i, u, v))
        out.push_back(SignatureWitness{i, u, v, w->first, w->second});
    }
  }
  return out;
}

VerifyResult verify_definition(const LabelledQuiver& q, const Certificate& cert) {
  VerifyResult res;
  for (std::size_t i = 0; i < cert.terms.size(); ++i) {
    if (cert.terms[i].left.is_zero() || cert.terms[i].right.is_zero()) {
      res.diagnostic = "term " + std::to_string(i) + " has a zero cofactor";
      return res;
    }
  }
  if (!(certificate_expansion(cert) == cert.claim)) {
    res.diagnostic = "expansion does not equal the claim";
    return res;
  }
  const Signature sf = q.sigma(cert.claim);
  if (sf.empty()) {
    res.diagnostic = "claim is not compatible with the quiver";
    return res;
  }
  for (std::size_t i = 0; i < cert.terms.size(); ++i) {
    const auto& t = cert.terms[i];
    const Signature reach =
        compose(q.sigma(t.left), compose(q.sigma(cert.generators[t.gen].poly), q.sigma(t.right)));
    if (!sf.subset_of(reach)) {
      for (const auto& [u, v] : sf.pairs()) {
        if (!reach.test(u, v)) {
          res.diagnostic = "term " + std::to_string(i) + " (generator " +
                           cert.generators[t.gen].name + ") has no path factorization for " +
                           pair_str(q, u, v);
          return res;
        }
      }
    }
  }
  res.ok = true;
  return res;
}

VerifyResult verify_criterion(const LabelledQuiver& q, const Certificate& cert) {
  VerifyResult res;
  if (!(certificate_expansion(cert) == cert.claim)) {
    res.diagnostic = "expansion does not equal the claim";
    return res;
  }
  if (!cert.expanded()) throw error("criterion requires expanded form");
  const Signature sf = q.sigma(cert.claim);
  if (sf.empty()) {
    res.diagnostic = "claim is not compatible with the quiver";
    return res;
  }
  std::set<GenIndex> used;
  for (const auto& t : cert.terms) used.insert(t.gen);
  for (const GenIndex gi : used) {
    const auto it = cert.witnesses.find(gi);
    if (it == cert.witnesses.end()) {
      res.diagnostic = "no witness monomial for generator " + cert.generators[gi].name;
      return res;
    }
    if (!cert.generators[gi].poly.contains(it->second)) {
      res.diagnostic =
          "witness for generator " + cert.generators[gi].name + " is not in its support";
      return res;
    }
    if (!(q.sigma(it->second) == q.sigma(cert.generators[gi].poly))) {
      res.diagnostic = "witness for generator " + cert.generators[gi].name +
                       " does not have the generator's signature";
      return res;
    }
  }
  for (std::size_t i = 0; i < cert.terms.size(); ++i) {
    const auto& t = cert.terms[i];
    const Monomial& a = t.left.terms().begin()->first;
    const Monomial& b = t.right.terms().begin()->first;
    const Signature s = q.sigma(a * cert.witnesses.at(t.gen) * b);
    res.term_signatures.push_back(s);
    if (!sf.subset_of(s)) {
      for (const auto& [u, v] : sf.pairs()) {
        if (!s.test(u, v)) {
          res.diagnostic = "term " + std::to_string(i) + ": σ(claim) is not contained in σ(a·m·b), missing " +
                           pair_str(q, u, v);
          return res;
        }
      }
    }
  }
  res.ok = true;
  return res;
}

Certificate compose_certificates(const Certificate& outer,
                                 const std::map<std::string, Certificate>& inner) {
  Certificate out;
  out.claim = outer.claim;

  // Merge the inner certificates' generator lists by name.
  auto merged_index = [&](const Generator& g) -> GenIndex {
    for (GenIndex i = 0; i < out.generators.size(); ++i) {
      if (out.generators[i].name == g.name) {
        if (!(out.generators[i].poly == g.poly))
          throw error("inner certificates disagree on generator '" + g.name + "'");
        return i;
      }
    }
    out.generators.push_back(g);
    return out.generators.size() - 1;
  };
  for (const auto& [name, cert] : inner)
    for (const auto& g : cert.generators) merged_index(g);

  for (const auto& t : outer.terms) {
    const Generator& g = outer.generators.at(t.gen);
    const auto it = inner.find(g.name);
    if (it == inner.end())
      throw error("no inner certificate for generator '" + g.name + "'");
    const Certificate& ic = it->second;
    if (!(ic.claim == g.poly))
      throw error("inner certificate claim differs from generator '" + g.name + "'");
    for (const auto& s : ic.terms) {
      out.terms.push_back(CertTerm{t.left * s.left, merged_index(ic.generators.at(s.gen)),
                                   s.right * t.right});
    }
  }
  return out;
}

}  // namespace qgb
