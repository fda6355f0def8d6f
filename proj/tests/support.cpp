#include "support.hpp"

#include <algorithm>
#include <functional>

namespace qtest {

using namespace qgb;

namespace {

Alphabet running_alphabet() {
  Alphabet a;
  for (const char* name : {"h1", "h2", "b1", "b2", "th1", "th2", "i", "d"}) a.intern(name);
  return a;
}

}  // namespace

RunningExample::RunningExample() : quiver(running_alphabet(), {"v1", "v2", "v3"}) {
  const auto id = [&](const char* n) { return alphabet().require(n); };
  const auto v = [&](const char* n) { return quiver.require_vertex(n); };
  quiver.add_edge(v("v1"), v("v2"), id("d"));
  quiver.add_edge(v("v2"), v("v3"), id("d"));
  quiver.add_edge(v("v2"), v("v3"), id("b1"));
  quiver.add_edge(v("v1"), v("v2"), id("b2"));
  quiver.add_edge(v("v2"), v("v1"), id("i"));
  quiver.add_edge(v("v3"), v("v2"), id("i"));
  quiver.add_edge(v("v2"), v("v2"), id("h1"));
  quiver.add_edge(v("v3"), v("v3"), id("h1"));
  quiver.add_edge(v("v1"), v("v1"), id("h2"));
  quiver.add_edge(v("v2"), v("v2"), id("h2"));
  quiver.add_edge(v("v3"), v("v3"), id("th1"));
  quiver.add_edge(v("v2"), v("v2"), id("th2"));

  assumptions = {
      {"f1", poly("d*h1 - h1*d - b1*h1")}, {"f2", poly("d*h2 - h2*d - b2*h2")},
      {"f3", poly("h1*th1 - 1")},          {"f4", poly("h2*th2 - 1")},
      {"f5", poly("d*i - 1")},
  };
  claim = poly("(d - b1)*(d - b2)*h2*i*th2*h1*i*th1 - 1");
}

DegLexOrder RunningExample::d_greatest_order() const {
  std::vector<SymbolId> prec;
  for (const char* n : {"d", "b1", "b2", "h1", "h2", "th1", "th2", "i"})
    prec.push_back(alphabet().require(n));
  return DegLexOrder(alphabet(), prec);
}

DegLexOrder RunningExample::completion_order() const {
  std::vector<SymbolId> prec;
  for (const char* n : {"h2", "b2", "d", "b1", "h1", "th1", "th2", "i"})
    prec.push_back(alphabet().require(n));
  return DegLexOrder(alphabet(), prec);
}

std::vector<Polynomial> RunningExample::assumption_polys() const {
  std::vector<Polynomial> out;
  for (const auto& g : assumptions) out.push_back(g.poly);
  return out;
}

Signature RunningExample::sig(const std::vector<std::pair<std::string, std::string>>& pairs) const {
  Signature s(quiver.vertex_count());
  for (const auto& [u, v] : pairs) s.set(quiver.require_vertex(u), quiver.require_vertex(v));
  return s;
}

Signature sigma_bruteforce(const LabelledQuiver& q, const Monomial& m) {
  Signature s(q.vertex_count());
  if (m.is_one()) return Signature::diagonal(q.vertex_count());
  const auto& word = m.word();
  // The rightmost letter acts first: walk the word from the back.
  std::function<void(std::size_t, VertexId, VertexId)> walk = [&](std::size_t remaining,
                                                                  VertexId cur, VertexId start) {
    if (remaining == 0) {
      s.set(start, cur);
      return;
    }
    const SymbolId wanted = word[remaining - 1];
    for (const auto& e : q.edges())
      if (e.src == cur && e.label == wanted) walk(remaining - 1, e.tgt, start);
  };
  for (VertexId v = 0; v < q.vertex_count(); ++v) walk(word.size(), v, v);
  return s;
}

std::vector<std::pair<Monomial, Monomial>> divisions_bruteforce(const Monomial& m,
                                                                const Monomial& d) {
  std::vector<std::pair<Monomial, Monomial>> out;
  for (std::size_t alen = 0; alen + d.degree() <= m.degree(); ++alen) {
    const std::size_t blen = m.degree() - d.degree() - alen;
    if (m.factor(alen, d.degree()) == d) out.emplace_back(m.prefix(alen), m.suffix(blen));
  }
  return out;
}

Monomial random_word(Rng& rng, std::size_t alphabet_size, std::size_t max_len) {
  const std::size_t len = rng.below(max_len + 1);
  std::vector<SymbolId> w;
  for (std::size_t k = 0; k < len; ++k) w.push_back(static_cast<SymbolId>(rng.below(alphabet_size)));
  return Monomial(std::move(w));
}

Polynomial random_poly(Rng& rng, std::size_t alphabet_size, std::size_t max_terms,
                       std::size_t max_len) {
  Polynomial f;
  const std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t k = 0; k < n; ++k)
    f.add_term(rng.coefficient(), random_word(rng, alphabet_size, max_len));
  return f;
}

LabelledQuiver random_quiver(Rng& rng, std::size_t max_vertices, std::size_t max_edges,
                             std::size_t alphabet_size) {
  Alphabet a;
  for (std::size_t k = 0; k < alphabet_size; ++k) a.intern("x" + std::to_string(k));
  const std::size_t nv = 1 + rng.below(max_vertices);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < nv; ++v) names.push_back("u" + std::to_string(v));
  LabelledQuiver q(std::move(a), std::move(names));
  const std::size_t ne = 1 + rng.below(max_edges);
  for (std::size_t e = 0; e < ne; ++e)
    q.add_edge(static_cast<VertexId>(rng.below(nv)), static_cast<VertexId>(rng.below(nv)),
               static_cast<SymbolId>(rng.below(alphabet_size)));
  return q;
}

namespace {

/// Words of all paths from `from` to `to` of length <= max_len (the empty
/// word included when from == to).
std::vector<Monomial> paths_between(const LabelledQuiver& q, VertexId from, VertexId to,
                                    std::size_t max_len) {
  std::vector<Monomial> out;
  struct State {
    VertexId at;
    std::vector<SymbolId> word;  // built right to left
  };
  std::vector<State> frontier{{from, {}}};
  if (from == to) out.push_back(Monomial::one());
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<State> next;
    for (const auto& st : frontier) {
      for (const auto& e : q.edges()) {
        if (e.src != st.at) continue;
        State s{e.tgt, st.word};
        s.word.insert(s.word.begin(), e.label);
        if (e.tgt == to) out.push_back(Monomial(s.word));
        next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

UniqueLabelInstance random_unique_label_instance(Rng& rng) {
  const std::size_t nv = 1 + rng.below(4);
  const std::size_t ne = 1 + rng.below(6);
  Alphabet a;
  for (std::size_t k = 0; k < ne; ++k) a.intern("x" + std::to_string(k));
  std::vector<std::string> names;
  for (std::size_t v = 0; v < nv; ++v) names.push_back("u" + std::to_string(v));
  LabelledQuiver q(std::move(a), std::move(names));
  for (std::size_t e = 0; e < ne; ++e)
    q.add_edge(static_cast<VertexId>(rng.below(nv)), static_cast<VertexId>(rng.below(nv)),
               static_cast<SymbolId>(e));

  UniqueLabelInstance inst{std::move(q), {}};
  const std::size_t ngens = 1 + rng.below(3);
  for (std::size_t k = 0; k < ngens && inst.generators.size() < 3; ++k) {
    const VertexId u = static_cast<VertexId>(rng.below(nv));
    // A random walk fixes the endpoint; further monomials use other paths
    // with the same endpoints, keeping the generator compatible.
    VertexId cur = u;
    std::vector<SymbolId> word;
    const std::size_t len = 1 + rng.below(3);
    bool stuck = false;
    for (std::size_t s = 0; s < len; ++s) {
      std::vector<std::size_t> outgoing;
      for (std::size_t e = 0; e < inst.quiver.edges().size(); ++e)
        if (inst.quiver.edges()[e].src == cur) outgoing.push_back(e);
      if (outgoing.empty()) {
        stuck = word.empty();
        break;
      }
      const auto& e = inst.quiver.edges()[outgoing[rng.below(outgoing.size())]];
      word.insert(word.begin(), e.label);
      cur = e.tgt;
    }
    if (stuck) continue;
    Polynomial g = Polynomial::term(rng.coefficient(), Monomial(std::move(word)));
    const VertexId v = cur;
    if (rng.chance(0.5)) {
      auto alternatives = paths_between(inst.quiver, u, v, 3);
      std::erase_if(alternatives, [&](const Monomial& m) { return g.contains(m); });
      if (!alternatives.empty())
        g.add_term(rng.coefficient(), alternatives[rng.below(alternatives.size())]);
    }
    if (u == v && rng.chance(0.4)) g.add_term(rng.coefficient(), Monomial::one());
    if (g.is_zero() || !inst.quiver.is_compatible(g)) continue;
    inst.generators.push_back(Generator{"g" + std::to_string(inst.generators.size() + 1), g});
  }
  return inst;
}

Polynomial random_combination(Rng& rng, const LabelledQuiver& q,
                              const std::vector<Generator>& gens) {
  if (gens.empty()) return Polynomial::zero();
  Polynomial f;
  std::optional<std::pair<VertexId, VertexId>> target;  // shared (start, end) of all terms
  const std::size_t nterms = 1 + rng.below(3);
  for (std::size_t k = 0; k < nterms; ++k) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const Generator& g = gens[rng.below(gens.size())];
      const auto gpairs = q.sigma(g.poly).pairs();
      if (gpairs.empty()) break;
      const auto [ug, vg] = gpairs[rng.below(gpairs.size())];
      std::vector<Monomial> lefts, rights;
      if (!target) {
        for (VertexId w = 0; w < q.vertex_count(); ++w) {
          const auto ps = paths_between(q, vg, w, 2);
          lefts.insert(lefts.end(), ps.begin(), ps.end());
        }
        for (VertexId s = 0; s < q.vertex_count(); ++s) {
          const auto ps = paths_between(q, s, ug, 2);
          rights.insert(rights.end(), ps.begin(), ps.end());
        }
      } else {
        lefts = paths_between(q, vg, target->second, 2);
        rights = paths_between(q, target->first, ug, 2);
      }
      if (lefts.empty() || rights.empty()) continue;
      const Monomial a = lefts[rng.below(lefts.size())];
      const Monomial b = rights[rng.below(rights.size())];
      f += Polynomial::term(rng.coefficient(), a) * g.poly * Polynomial::term(1, b);
      if (!target) {
        const auto term_sig = q.sigma(Polynomial::term(1, a) * g.poly * Polynomial::term(1, b));
        const auto tp = term_sig.pairs();
        if (!tp.empty()) target = tp[rng.below(tp.size())];
      }
      break;
    }
  }
  return f;
}

std::optional<RatMatrix> invert(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const Rational d = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      const Rational factor = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) -= factor * a.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace qtest
