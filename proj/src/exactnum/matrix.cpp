#include "cesaro/exactnum/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "cesaro/errors.hpp"

namespace cesaro {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t d = 0; d < n; ++d) m(d, d) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<BigRational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::principal_submatrix(const std::vector<std::size_t>& indices) const {
  RationalMatrix s(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) s(a, b) = (*this)(indices[a], indices[b]);
  return s;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

std::vector<std::vector<BigRational>> RationalMatrix::to_rows() const {
  std::vector<std::vector<BigRational>> out(rows_, std::vector<BigRational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigRational& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference shape mismatch");
  RationalMatrix out = a;
  for (std::size_t n = 0; n < out.data_.size(); ++n) out.data_[n] -= b.data_[n];
  return out;
}

BigRational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  std::size_t n = m.rows();
  RationalMatrix a = m;
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      BigRational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::vector<std::vector<BigRational>> nullspace(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::size_t rows = a.rows();
  std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t x = 0; x < cols; ++x) std::swap(a(p, x), a(r, x));
    BigRational inv = 1 / a(r, c);
    for (std::size_t x = 0; x < cols; ++x) a(r, x) *= inv;
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == r || a(o, c) == 0) continue;
      BigRational f = a(o, c);
      for (std::size_t x = 0; x < cols; ++x) a(o, x) -= f * a(r, x);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRational> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigRational> forward_substitute(const RationalMatrix& lower, const std::vector<BigRational>& rhs) {
  std::size_t n = lower.rows();
  std::vector<BigRational> x(n);
  for (std::size_t r = 0; r < n; ++r) {
    BigRational acc = rhs[r];
    for (std::size_t c = 0; c < r; ++c) acc -= lower(r, c) * x[c];
    if (lower(r, r) == 0) throw DomainError("forward_substitute: singular triangular matrix");
    x[r] = acc / lower(r, r);
  }
  return x;
}

UniPoly polynomial_determinant(UniPolyMatrix m) {
  std::size_t n = m.size();
  if (n == 0) return UniPoly(1);
  UniPoly sign(1);
  UniPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        m[r][c] = exact_divide(m[r][c] * m[k][k] - m[r][k] * m[k][c], prev);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::vector<std::size_t>> principal_index_sets(std::size_t n) {
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t a = 0; a < size; ++a) idx[a] = a;
    while (true) {
      sets.push_back(idx);
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t a = pos; a < size; ++a) idx[a] = idx[a - 1] + 1;
    }
  }
  return sets;
}

}  // namespace cesaro
