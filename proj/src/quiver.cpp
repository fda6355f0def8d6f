#include "qgb/quiver.hpp"

#include <algorithm>
#include <set>

#include "qgb/error.hpp"

namespace qgb {

LabelledQuiver::LabelledQuiver(Alphabet alphabet, std::vector<std::string> vertex_names)
    : alphabet_(std::move(alphabet)), vertex_names_(std::move(vertex_names)) {
  std::set<std::string> seen;
  for (const auto& n : vertex_names_)
    if (!seen.insert(n).second) throw input_error("duplicate vertex name '" + n + "'");
}

LabelledQuiver::LabelledQuiver(const LabelledQuiver& o)
    : alphabet_(o.alphabet_), vertex_names_(o.vertex_names_), edges_(o.edges_) {}

LabelledQuiver& LabelledQuiver::operator=(const LabelledQuiver& o) {
  if (this != &o) {
    alphabet_ = o.alphabet_;
    vertex_names_ = o.vertex_names_;
    edges_ = o.edges_;
    std::lock_guard lock(cache_mutex_);
    sigma_cache_.clear();
  }
  return *this;
}

void LabelledQuiver::add_edge(VertexId src, VertexId tgt, SymbolId label) {
  if (src >= vertex_count() || tgt >= vertex_count()) throw input_error("edge endpoint out of range");
  if (label >= alphabet_.size()) throw input_error("edge label not in alphabet");
  const Edge e{src, tgt, label};
  if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) return;
  edges_.push_back(e);
  std::lock_guard lock(cache_mutex_);
  sigma_cache_.clear();
}

const std::string& LabelledQuiver::vertex_name(VertexId v) const {
  if (v >= vertex_names_.size()) throw error("vertex id out of range");
  return vertex_names_[v];
}

std::optional<VertexId> LabelledQuiver::find_vertex(const std::string& name) const {
  for (VertexId v = 0; v < vertex_names_.size(); ++v)
    if (vertex_names_[v] == name) return v;
  return std::nullopt;
}

VertexId LabelledQuiver::require_vertex(const std::string& name) const {
  const auto v = find_vertex(name);
  if (!v) throw input_error("unknown vertex '" + name + "'");
  return *v;
}

Signature LabelledQuiver::edge_relation(SymbolId x) const {
  if (x >= alphabet_.size()) throw input_error("symbol id not in alphabet");
  Signature s(vertex_count());
  for (const auto& e : edges_)
    if (e.label == x) s.set(e.src, e.tgt);
  return s;
}

Signature LabelledQuiver::sigma(const Monomial& m) const {
  if (m.is_one()) return Signature::diagonal(vertex_count());
  {
    std::lock_guard lock(cache_mutex_);
    const auto it = sigma_cache_.find(m);
    if (it != sigma_cache_.end()) return it->second;
  }
  // Fold edge relations right to left: the rightmost letter acts first.
  const auto& w = m.word();
  Signature acc = edge_relation(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) acc = compose(edge_relation(w[i]), acc);
  {
    std::lock_guard lock(cache_mutex_);
    sigma_cache_.emplace(m, acc);
  }
  return acc;
}

Signature LabelledQuiver::sigma(const Polynomial& f) const {
  if (f.is_zero()) return Signature::full(vertex_count());
  Signature acc = Signature::full(vertex_count());
  for (const auto& [m, c] : f.terms()) acc = acc & sigma(m);
  return acc;
}

CompatibilityInfo LabelledQuiver::compatibility(const Polynomial& f) const {
  CompatibilityInfo info;
  info.signature = sigma(f);
  info.compatible = !info.signature.empty();
  info.uniform = true;
  std::optional<Signature> first;
  for (const auto& [m, c] : f.terms()) {
    Signature s = sigma(m);
    if (!first)
      first = std::move(s);
    else if (!(s == *first)) {
      info.uniform = false;
      break;
    }
  }
  return info;
}

bool LabelledQuiver::has_unique_edge_labels() const {
  std::set<SymbolId> seen;
  for (const auto& e : edges_)
    if (!seen.insert(e.label).second) return false;
  return true;
}

std::string LabelledQuiver::signature_str(const Signature& s) const {
  std::string out = "{";
  bool sep = false;
  for (const auto& [u, v] : s.pairs()) {
    if (sep) out += ", ";
    out += "(" + vertex_name(u) + "," + vertex_name(v) + ")";
    sep = true;
  }
  return out + "}";
}

}  // namespace qgb
