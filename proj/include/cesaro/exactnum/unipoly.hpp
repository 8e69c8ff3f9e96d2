#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cesaro/exactnum/rational.hpp"

namespace cesaro {

/// Dense univariate polynomial over Q. Coefficients are stored lowest degree
/// first with no trailing zeros, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long constant);  // NOLINT(google-explicit-constructor)
  UniPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<BigRational> coefficients);

  /// The monomial x.
  static UniPoly x();
  /// Product of (x - r) over the given roots.
  static UniPoly from_roots(const std::vector<BigRational>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRational& leading() const;
  BigRational coefficient(std::size_t power) const;
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  BigRational operator()(const BigRational& x) const;
  int sign_at(const BigRational& x) const;
  /// Sign of p(x) as x -> +inf.
  int sign_at_infinity() const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(x + shift).
  UniPoly shifted(const BigRational& shift) const;

  /// Primitive integer multiple with positive leading coefficient.
  std::vector<BigInteger> primitive_integer_coefficients() const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view variable = "alpha") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

UniPoly pow(const UniPoly& base, unsigned exponent);

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws std::logic_error if b does not divide a.
UniPoly exact_divide(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun's square-free decomposition: p = c * prod_m factors[m-1]^m with each
/// factor monic, square-free and pairwise coprime. Constant factors are
/// returned as the polynomial 1.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);
/// Monic square-free part p / gcd(p, p').
UniPoly squarefree_part(const UniPoly& p);

/// Sturm chain p, p', -rem(...), ...
std::vector<UniPoly> sturm_sequence(const UniPoly& p);
int sign_variations_at(const std::vector<UniPoly>& chain, const BigRational& x);
int sign_variations_at_infinity(const std::vector<UniPoly>& chain);
/// Distinct roots of p in the open interval (lo, hi); hi may not be below lo.
/// Endpoint roots are excluded.
int count_roots_open(const UniPoly& p, const BigRational& lo, const BigRational& hi);
/// Distinct roots of p in (lo, +inf).
int count_roots_above(const UniPoly& p, const BigRational& lo);

/// Strict upper bound on the absolute value of every complex root (Cauchy).
BigRational cauchy_root_bound(const UniPoly& p);

}  // namespace cesaro
