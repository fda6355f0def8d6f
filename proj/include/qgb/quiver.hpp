#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qgb/monomial.hpp"
#include "qgb/polynomial.hpp"
#include "qgb/signature.hpp"
#include "qgb/symbol.hpp"

namespace qgb {

using VertexId = std::uint32_t;

struct Edge {
  VertexId src;
  VertexId tgt;
  SymbolId label;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct CompatibilityInfo {
  bool compatible = false;
  bool uniform = false;  // every support monomial has the same signature
  Signature signature;
};

/// Directed multigraph with edges labelled by alphabet symbols. Conceptually
/// immutable once populated; the signature cache is safe for concurrent use.
class LabelledQuiver {
 public:
  LabelledQuiver(Alphabet alphabet, std::vector<std::string> vertex_names);

  LabelledQuiver(const LabelledQuiver& o);
  LabelledQuiver& operator=(const LabelledQuiver& o);

  /// Identical (src, tgt, label) triples are stored once.
  void add_edge(VertexId src, VertexId tgt, SymbolId label);

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(vertex_names_.size()); }
  const std::string& vertex_name(VertexId v) const;
  std::optional<VertexId> find_vertex(const std::string& name) const;
  VertexId require_vertex(const std::string& name) const;
  const std::vector<Edge>& edges() const { return edges_; }

  /// {(s(e), t(e)) | l(e) = x}. The symbol must belong to the alphabet.
  Signature edge_relation(SymbolId x) const;

  /// σ(m): endpoints of all paths whose label word is m; σ(1) is the diagonal.
  Signature sigma(const Monomial& m) const;

  /// σ(f): intersection over the support; σ(0) = V x V.
  Signature sigma(const Polynomial& f) const;

  CompatibilityInfo compatibility(const Polynomial& f) const;
  bool is_compatible(const Polynomial& f) const { return !sigma(f).empty(); }

  /// True iff no label appears on two distinct edges.
  bool has_unique_edge_labels() const;

  /// "{(v1,v2), ...}" using vertex names, for diagnostics and reports.
  std::string signature_str(const Signature& s) const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Monomial, Signature, MonomialHash> sigma_cache_;
};

}  // namespace qgb
