#pragma once

#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <vector>

#include "cesaro/corner.hpp"
#include "cesaro/exactnum/matrix.hpp"
#include "cesaro/exactnum/rational.hpp"

namespace cesaro {

/// Throws DomainError unless order >= 1.
void require_order(unsigned order);
/// Throws DomainError unless alpha > -1.
void require_alpha(const BigRational& alpha);

/// Exact entry of the generalized Cesaro matrix of integer order k:
///   k * prod_{m=1}^{k-1} (i-j+m) / prod_{m=1}^{k} (i+m+alpha)   for j <= i,
/// and 0 above the diagonal.
BigRational entry(unsigned order, const BigRational& alpha, std::size_t i, std::size_t j);

/// Entry of the order-beta matrix for real alpha > -1, beta > 0:
///   beta Gamma(i-j+beta) Gamma(i+alpha+1) / (Gamma(i-j+1) Gamma(i+alpha+beta+1)).
/// Floating point only; the exact code paths never consume it.
double entry_general_beta(double alpha, double beta, std::size_t i, std::size_t j);

/// Lower-triangular order-k matrix at a fixed alpha. Rows are computed on
/// first use and memoized; copies share the memo, which is mutex-guarded so
/// concurrent readers see each row filled exactly once.
class CesaroMatrix {
 public:
  CesaroMatrix(unsigned order, BigRational alpha);

  unsigned order() const { return order_; }
  const BigRational& alpha() const { return alpha_; }

  BigRational entry(std::size_t i, std::size_t j) const;
  /// Entries (i, 0..i). The reference stays valid for the matrix lifetime.
  const std::vector<BigRational>& row(std::size_t i) const;

 private:
  struct Memo {
    std::mutex mutex;
    std::deque<std::vector<BigRational>> rows;
  };

  std::vector<BigRational> compute_row(std::size_t i) const;

  unsigned order_;
  BigRational alpha_;
  std::shared_ptr<Memo> memo_;
};

/// Top-left n x n block of a Cesaro matrix.
class TruncatedMatrix {
 public:
  explicit TruncatedMatrix(RationalMatrix values) : values_(std::move(values)) {}
  std::size_t size() const { return values_.rows(); }
  const BigRational& operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  const RationalMatrix& values() const { return values_; }

 private:
  RationalMatrix values_;
};

TruncatedMatrix truncate(const CesaroMatrix& m, std::size_t n);

/// (M Q M*)_{ij}: the corner part plus sum_{u=c}^{min(i,j)} m_{iu} m_{ju}.
BigRational mqm_star_entry(const CesaroMatrix& m, const CornerInterrupter& q, std::size_t i, std::size_t j);

/// (Q M*)_{ij} = sum_a q_{ia} m_{ja}.
BigRational qm_star_entry(const CornerInterrupter& q, const CesaroMatrix& m, std::size_t i, std::size_t j);

}  // namespace cesaro
