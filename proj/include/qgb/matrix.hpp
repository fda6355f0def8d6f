#pragma once

#include <cstddef>
#include <vector>

#include "qgb/rational.hpp"

namespace qgb {

/// Dense matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& o);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& c, const RatMatrix& m);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace qgb
