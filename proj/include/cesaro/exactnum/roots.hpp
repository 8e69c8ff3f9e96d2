#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cesaro/exactnum/rational.hpp"
#include "cesaro/exactnum/unipoly.hpp"

namespace cesaro {

/// An irrational real root, given as the unique root of the square-free
/// polynomial `poly` in the open interval (lo, hi). Neither endpoint is a
/// root of `poly`.
struct IsolatedRoot {
  UniPoly poly;
  BigRational lo;
  BigRational hi;

  /// Halves the interval, keeping the root inside.
  void refine();
  BigRational width() const { return hi - lo; }
};

struct PlusInfinity {
  friend bool operator==(PlusInfinity, PlusInfinity) { return true; }
};

/// A boundary point on the real line: an exact rational, an isolated
/// irrational root, or +infinity.
using RealPoint = std::variant<BigRational, IsolatedRoot, PlusInfinity>;

std::string to_string(const RealPoint& point);

/// Interval of the alpha line with a finite rational left end and a rational
/// or infinite right end.
struct Domain {
  BigRational lo = -1;
  bool lo_closed = false;
  std::optional<BigRational> hi;  // nullopt = +inf
  bool hi_closed = false;

  /// Accepts "(a,b]", "[a,b)", "(a,inf)" and similar; endpoints are exact
  /// rationals ("p/q" or decimal).
  static Domain parse(std::string_view text);

  bool empty() const;
  bool contains(const BigRational& x) const;
  std::string to_string() const;
};

struct RationalRoot {
  BigRational value;
  unsigned multiplicity = 1;
};

struct IrrationalRoot {
  IsolatedRoot root;
  unsigned multiplicity = 1;
};

/// Every real root of a polynomial inside a domain, each listed once with its
/// multiplicity. Isolating intervals are pairwise disjoint and contain none
/// of the rational roots; each has width <= 1/1024.
struct RootIsolation {
  std::vector<RationalRoot> rational;
  std::vector<IrrationalRoot> irrational;

  std::size_t distinct_count() const { return rational.size() + irrational.size(); }
  /// Distinct roots in increasing order.
  std::vector<RealPoint> sorted_points() const;
};

/// Square-free decomposition, Sturm bisection and an exact rational-root
/// test on each isolating interval. Throws DomainError for the zero polynomial.
RootIsolation isolate_roots(const UniPoly& p, const Domain& domain);

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

Sign to_sign(int s);
char sign_symbol(Sign s);

/// A piece of a domain partition: a single point or an interval between two
/// consecutive boundaries.
struct DomainPiece {
  RealPoint left;
  bool left_closed = false;
  RealPoint right;
  bool right_closed = false;
  bool point = false;

  std::string to_string() const;
};

struct SignPiece {
  DomainPiece piece;
  Sign sign = Sign::zero;
};

/// Sorted distinct roots of all the given polynomials in the domain (zero and
/// constant polynomials contribute nothing).
std::vector<RealPoint> merged_roots(const std::vector<UniPoly>& polys, const Domain& domain);

/// Splits the domain at the sorted boundary points into alternating open
/// intervals and single points.
std::vector<DomainPiece> partition_domain(const std::vector<RealPoint>& sorted_points, const Domain& domain);

/// Sign of p on the piece. For interval pieces p must have no root inside the
/// piece, so any interior rational sample decides.
Sign sign_on_piece(const UniPoly& p, const DomainPiece& piece);

std::vector<SignPiece> sign_between_roots(const UniPoly& p, const RootIsolation& isolation, const Domain& domain);

}  // namespace cesaro
