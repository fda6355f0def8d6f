#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qgb/matrix.hpp"
#include "qgb/polynomial.hpp"
#include "qgb/quiver.hpp"

namespace qgb {

/// Per-vertex dimensions and per-edge matrices realizing the quiver; the
/// matrix of edge k (aligned with quiver.edges()) has shape
/// dims[tgt] x dims[src].
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<RatMatrix> mats;
};

/// Outcome of the consistency check. Beyond the sufficient conditions,
/// consistency is only established up to a path length: the bounded
/// comparison is a heuristic, not a decision procedure.
struct ConsistencyVerdict {
  enum class Status { SufficientCondition, UpToLength, Inconsistent, Unknown };
  Status status = Status::Unknown;
  int checked_length = 0;
  std::vector<std::size_t> witness_a, witness_b;  // edge index paths, set when Inconsistent
  std::string detail;
};

/// Validates shapes (error on mismatch), then tests the sufficient conditions
/// (per-vertex distinct outgoing labels, or distinct incoming labels); when
/// neither holds, compares matrix products of label-coincident path pairs up
/// to max_len. Returns the strongest verdict established.
ConsistencyVerdict check_consistency(const LabelledQuiver& q, const Representation& rep,
                                     int max_len);

/// Evaluates polynomials as linear maps along paths of the quiver. Requires a
/// verdict other than Inconsistent; Unknown additionally requires
/// assume_consistent.
class Realizer {
 public:
  Realizer(const LabelledQuiver& q, const Representation& rep, const ConsistencyVerdict& verdict,
           bool assume_consistent = false);

  /// Σ c_m · (product along a path from v to w labelled m); (v,w) must lie in
  /// σ(f). For the empty word the product is the identity on dims[v].
  RatMatrix realize(const Polynomial& f, VertexId v, VertexId w) const;

  /// True iff realize(f, u, v) is zero for every (u,v) in σ(f).
  bool verify_zero(const Polynomial& f) const;

 private:
  RatMatrix word_product(const Monomial& m, VertexId v, VertexId w) const;

  const LabelledQuiver& q_;
  const Representation& rep_;
};

}  // namespace qgb
