#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qgb {

/// A set of (source, target) vertex pairs, stored as a dense boolean relation
/// on V x V. Row index is the path source, column index the path target.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::uint32_t n);  // empty relation

  static Signature diagonal(std::uint32_t n);
  static Signature full(std::uint32_t n);

  std::uint32_t dim() const { return n_; }
  bool test(std::uint32_t u, std::uint32_t v) const;
  void set(std::uint32_t u, std::uint32_t v);

  bool empty() const;
  std::size_t count() const;
  bool subset_of(const Signature& o) const;

  /// Pairs in lexicographic order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;

  friend Signature operator&(const Signature& a, const Signature& b);
  friend Signature operator|(const Signature& a, const Signature& b);
  friend bool operator==(const Signature& a, const Signature& b);

  /// {(u,w) | exists v: (u,v) in inner and (v,w) in outer}. The inner relation
  /// acts first, matching word order: paths for m1·m2 traverse m2 then m1.
  friend Signature compose(const Signature& outer, const Signature& inner);

 private:
  const std::uint64_t* row(std::uint32_t u) const { return bits_.data() + std::size_t(u) * wpr_; }
  std::uint64_t* row(std::uint32_t u) { return bits_.data() + std::size_t(u) * wpr_; }

  std::uint32_t n_ = 0;
  std::uint32_t wpr_ = 0;  // 64-bit words per row
  std::vector<std::uint64_t> bits_;
};

}  // namespace qgb
