#pragma once

#include <cstddef>

#include "cesaro/exactnum/matrix.hpp"

namespace cesaro {

/// Interrupter Q that equals the identity except for a symmetric c x c
/// top-left block.
class CornerInterrupter {
 public:
  /// Throws DomainError unless `corner` is square, nonempty and symmetric.
  explicit CornerInterrupter(RationalMatrix corner);
  static CornerInterrupter identity(std::size_t corner_size);

  std::size_t corner_size() const { return corner_.rows(); }
  const RationalMatrix& corner() const { return corner_; }
  BigRational entry(std::size_t a, std::size_t b) const;

  friend bool operator==(const CornerInterrupter& a, const CornerInterrupter& b) { return a.corner_ == b.corner_; }

 private:
  RationalMatrix corner_;
};

}  // namespace cesaro
