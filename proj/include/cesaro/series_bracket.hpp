#pragma once

#include <cstddef>

#include "cesaro/exactnum/rational.hpp"

namespace cesaro {

/// lower <= true value <= upper, both exact rationals.
struct SumBracket {
  BigRational lower;
  BigRational upper;

  BigRational width() const { return upper - lower; }
  BigRational midpoint() const { return (lower + upper) / 2; }
  bool contains(const BigRational& x) const { return lower <= x && x <= upper; }
};

/// Sums nonnegative rational terms into a rigorous bracket. The first
/// `exact_terms` terms are accumulated exactly; later ones are rounded
/// outward to multiples of 2^-precision_bits so long sums stay cheap. With
/// few terms, lower() is the exact partial sum.
class BracketAccumulator {
 public:
  explicit BracketAccumulator(std::size_t exact_terms = 256, unsigned precision_bits = 160);

  void add(const BigRational& term);
  /// Adds num/den (den > 0) without canonicalizing.
  void add(const BigInteger& num, const BigInteger& den);

  std::size_t count() const { return count_; }
  BigRational lower() const;
  BigRational upper() const;
  SumBracket bracket(const BigRational& tail_bound) const { return {lower(), upper() + tail_bound}; }

 private:
  std::size_t exact_terms_;
  unsigned bits_;
  std::size_t count_ = 0;
  BigRational exact_;
  BigInteger floor_sum_;
  BigInteger ceil_sum_;
};

/// Bound on sum_{u >= first} f(u) for nonnegative terms dominated by
///   k^2 (u + 2k)^{2k-2} / (u + 1 + alpha)^{2k},
/// which covers both the telescoped series and the columns of M*M.
/// Uses (u+2k)/(u+1+alpha) <= rho for u >= first, then integral comparison
/// sum_{u>=first} (u+1+alpha)^-2 <= 1/(first+alpha). Needs first + alpha > 0.
BigRational cesaro_tail_bound(unsigned order, const BigRational& alpha, std::size_t first);

}  // namespace cesaro
