#include "qgb/signature.hpp"

#include <bit>

#include "qgb/error.hpp"

namespace qgb {

Signature::Signature(std::uint32_t n) : n_(n), wpr_((n + 63) / 64), bits_(std::size_t(n) * wpr_, 0) {}

Signature Signature::diagonal(std::uint32_t n) {
  Signature s(n);
  for (std::uint32_t v = 0; v < n; ++v) s.set(v, v);
  return s;
}

Signature Signature::full(std::uint32_t n) {
  Signature s(n);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v) s.set(u, v);
  return s;
}

bool Signature::test(std::uint32_t u, std::uint32_t v) const {
  return (row(u)[v / 64] >> (v % 64)) & 1u;
}

void Signature::set(std::uint32_t u, std::uint32_t v) {
  if (u >= n_ || v >= n_) throw error("signature pair out of range");
  row(u)[v / 64] |= std::uint64_t(1) << (v % 64);
}

bool Signature::empty() const {
  for (const auto w : bits_)
    if (w != 0) return false;
  return true;
}

std::size_t Signature::count() const {
  std::size_t n = 0;
  for (const auto w : bits_) n += std::popcount(w);
  return n;
}

bool Signature::subset_of(const Signature& o) const {
  if (n_ != o.n_) throw error("signature dimension mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~o.bits_[i]) return false;
  return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Signature::pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < n_; ++u)
    for (std::uint32_t v = 0; v < n_; ++v)
      if (test(u, v)) out.emplace_back(u, v);
  return out;
}

Signature operator&(const Signature& a, const Signature& b) {
  if (a.n_ != b.n_) throw error("signature dimension mismatch");
  Signature out(a.n_);
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] = a.bits_[i] & b.bits_[i];
  return out;
}

Signature operator|(const Signature& a, const Signature& b) {
  if (a.n_ != b.n_) throw error("signature dimension mismatch");
  Signature out(a.n_);
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] = a.bits_[i] | b.bits_[i];
  return out;
}

bool operator==(const Signature& a, const Signature& b) {
  return a.n_ == b.n_ && a.bits_ == b.bits_;
}

Signature compose(const Signature& outer, const Signature& inner) {
  if (outer.n_ != inner.n_) throw error("signature dimension mismatch");
  Signature out(outer.n_);
  for (std::uint32_t u = 0; u < inner.n_; ++u) {
    for (std::uint32_t v = 0; v < inner.n_; ++v) {
      if (!inner.test(u, v)) continue;
      const auto* src = outer.row(v);
      auto* dst = out.row(u);
      for (std::uint32_t w = 0; w < out.wpr_; ++w) dst[w] |= src[w];
    }
  }
  return out;
}

}  // namespace qgb
