#include "cesaro/corner.hpp"

#include "cesaro/errors.hpp"

namespace cesaro {

CornerInterrupter::CornerInterrupter(RationalMatrix corner) : corner_(std::move(corner)) {
  if (corner_.rows() == 0) throw DomainError("corner interrupter needs a corner of size >= 1");
  if (!corner_.is_symmetric()) throw DomainError("corner interrupter must be square and symmetric");
}

CornerInterrupter CornerInterrupter::identity(std::size_t corner_size) {
  return CornerInterrupter(RationalMatrix::identity(corner_size));
}

BigRational CornerInterrupter::entry(std::size_t a, std::size_t b) const {
  std::size_t c = corner_size();
  if (a < c && b < c) return corner_(a, b);
  return a == b ? 1 : 0;
}

}  // namespace cesaro
