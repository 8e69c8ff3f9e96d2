#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cesaro/exactnum/rational.hpp"
#include "cesaro/exactnum/unipoly.hpp"

namespace cesaro {

/// Small dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<BigRational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix principal_submatrix(const std::vector<std::size_t>& indices) const;
  bool is_symmetric() const;
  std::vector<std::vector<BigRational>> to_rows() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> data_;
};

BigRational determinant(const RationalMatrix& m);

/// Basis of {x : m x = 0}, by exact Gauss-Jordan elimination.
std::vector<std::vector<BigRational>> nullspace(const RationalMatrix& m);

/// Solves L x = b for lower-triangular L with nonzero diagonal.
std::vector<BigRational> forward_substitute(const RationalMatrix& lower, const std::vector<BigRational>& rhs);

using UniPolyMatrix = std::vector<std::vector<UniPoly>>;

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
UniPoly polynomial_determinant(UniPolyMatrix m);

/// Index subsets of {0..n-1} in order of size, then lexicographically.
std::vector<std::vector<std::size_t>> principal_index_sets(std::size_t n);

}  // namespace cesaro
