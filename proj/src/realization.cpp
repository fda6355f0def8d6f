#include "qgb/realization.hpp"

#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "qgb/error.hpp"

namespace qgb {

namespace {

void validate_shapes(const LabelledQuiver& q, const Representation& rep) {
  if (rep.dims.size() != q.vertex_count())
    throw error("representation: one dimension per vertex required");
  for (const auto d : rep.dims)
    if (d == 0) throw error("representation: dimensions must be positive");
  if (rep.mats.size() != q.edges().size())
    throw error("representation: one matrix per edge required");
  for (std::size_t e = 0; e < q.edges().size(); ++e) {
    const Edge& ed = q.edges()[e];
    if (rep.mats[e].rows() != rep.dims[ed.tgt] || rep.mats[e].cols() != rep.dims[ed.src])
      throw error("representation: matrix of edge " + std::to_string(e) +
                  " must have shape dims[tgt] x dims[src]");
  }
}

bool distinct_labels(const LabelledQuiver& q, bool outgoing) {
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    std::set<SymbolId> seen;
    for (const auto& e : q.edges()) {
      if ((outgoing ? e.src : e.tgt) != v) continue;
      if (!seen.insert(e.label).second) return false;
    }
  }
  return true;
}

}  // namespace

ConsistencyVerdict check_consistency(const LabelledQuiver& q, const Representation& rep,
                                     int max_len) {
  validate_shapes(q, rep);
  ConsistencyVerdict verdict;
  if (max_len < 1) throw error("consistency check needs max_len >= 1");

  if (distinct_labels(q, true)) {
    verdict.status = ConsistencyVerdict::Status::SufficientCondition;
    verdict.detail = "all outgoing edges of every vertex have distinct labels";
    return verdict;
  }
  if (distinct_labels(q, false)) {
    verdict.status = ConsistencyVerdict::Status::SufficientCondition;
    verdict.detail = "all incoming edges of every vertex have distinct labels";
    return verdict;
  }

  // Exhaustive comparison of label-coincident path pairs, one length at a time.
  struct PathState {
    VertexId start, end;
    Monomial word;
    RatMatrix mat;
    std::vector<std::size_t> edges;
  };
  constexpr std::size_t kWorkCap = 200000;
  std::size_t work = 0;

  std::vector<PathState> frontier;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    frontier.push_back(PathState{v, v, Monomial::one(), RatMatrix::identity(rep.dims[v]), {}});

  for (int len = 1; len <= max_len; ++len) {
    std::vector<PathState> next;
    std::map<std::tuple<VertexId, Monomial, VertexId>, std::size_t> groups;
    for (const auto& p : frontier) {
      for (std::size_t e = 0; e < q.edges().size(); ++e) {
        const Edge& ed = q.edges()[e];
        if (ed.src != p.end) continue;
        if (++work > kWorkCap) {
          verdict.status = ConsistencyVerdict::Status::Unknown;
          verdict.checked_length = len - 1;
          verdict.detail = "path comparison aborted: work cap exceeded";
          return verdict;
        }
        PathState s{p.start, ed.tgt, Monomial::letter(ed.label) * p.word, rep.mats[e] * p.mat,
                    p.edges};
        s.edges.push_back(e);
        const auto key = std::make_tuple(s.start, s.word, s.end);
        const auto it = groups.find(key);
        if (it == groups.end()) {
          groups.emplace(key, next.size());
          next.push_back(std::move(s));
        } else if (!(next[it->second].mat == s.mat)) {
          verdict.status = ConsistencyVerdict::Status::Inconsistent;
          verdict.checked_length = len;
          verdict.witness_a = next[it->second].edges;
          verdict.witness_b = s.edges;
          verdict.detail = "two equally labelled paths of length " + std::to_string(len) +
                           " induce different linear maps";
          return verdict;
        }
        // Equal products merge: extensions of either path stay equal.
      }
    }
    frontier = std::move(next);
  }
  verdict.status = ConsistencyVerdict::Status::UpToLength;
  verdict.checked_length = max_len;
  verdict.detail = "no mismatch among paths of length up to " + std::to_string(max_len);
  return verdict;
}

Realizer::Realizer(const LabelledQuiver& q, const Representation& rep,
                   const ConsistencyVerdict& verdict, bool assume_consistent)
    : q_(q), rep_(rep) {
  validate_shapes(q, rep);
  if (verdict.status == ConsistencyVerdict::Status::Inconsistent)
    throw error("representation is inconsistent with the labelling: " + verdict.detail);
  if (verdict.status == ConsistencyVerdict::Status::Unknown && !assume_consistent)
    throw error("consistency unknown; pass the override to evaluate anyway");
}

RatMatrix Realizer::word_product(const Monomial& m, VertexId v, VertexId w) const {
  // One product per reachable vertex, folding the word right to left.
  std::vector<std::optional<RatMatrix>> cur(q_.vertex_count());
  cur[v] = RatMatrix::identity(rep_.dims[v]);
  const auto& word = m.word();
  for (std::size_t i = word.size(); i-- > 0;) {
    std::vector<std::optional<RatMatrix>> next(q_.vertex_count());
    for (std::size_t e = 0; e < q_.edges().size(); ++e) {
      const Edge& ed = q_.edges()[e];
      if (ed.label != word[i] || !cur[ed.src]) continue;
      RatMatrix prod = rep_.mats[e] * (*cur[ed.src]);
      if (next[ed.tgt]) {
        if (!(*next[ed.tgt] == prod))
          throw error("representation is inconsistent: same-label paths diverge");
      } else {
        next[ed.tgt] = std::move(prod);
      }
    }
    cur = std::move(next);
  }
  if (!cur[w]) throw error("no path realizes the monomial between the given vertices");
  return *cur[w];
}

RatMatrix Realizer::realize(const Polynomial& f, VertexId v, VertexId w) const {
  if (!q_.sigma(f).test(v, w))
    throw error("(" + q_.vertex_name(v) + "," + q_.vertex_name(w) + ") is not in the signature");
  RatMatrix sum(rep_.dims[w], rep_.dims[v]);
  for (const auto& [m, c] : f.terms()) sum += c * word_product(m, v, w);
  return sum;
}

bool Realizer::verify_zero(const Polynomial& f) const {
  for (const auto& [u, v] : q_.sigma(f).pairs())
    if (!realize(f, u, v).is_zero()) return false;
  return true;
}

}  // namespace qgb
