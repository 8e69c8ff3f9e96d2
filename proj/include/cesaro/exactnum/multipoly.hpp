#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cesaro/exactnum/rational.hpp"
#include "cesaro/exactnum/unipoly.hpp"

namespace cesaro {

/// The fixed symbol table. The series summation index is `t` everywhere, so
/// `k` is free to mean the order of the Cesaro matrix.
enum class Var : std::uint8_t { alpha = 0, i = 1, j = 2, t = 3 };
inline constexpr std::size_t kVarCount = 4;

const char* var_name(Var v);

/// Values for every variable, used for full evaluation.
struct Assignment {
  BigRational alpha = 0;
  BigRational i = 0;
  BigRational j = 0;
  BigRational t = 0;

  const BigRational& operator[](Var v) const;
};

/// Sparse polynomial over Q in the variables {alpha, i, j, t}.
///
/// Terms live in an ordered map keyed by exponent tuples and zero
/// coefficients are never stored, so two equal polynomials always have
/// identical representations and equality is a plain map comparison.
class MultiPoly {
 public:
  using Exponents = std::array<std::uint16_t, kVarCount>;
  using Terms = std::map<Exponents, BigRational, std::greater<>>;

  MultiPoly() = default;
  MultiPoly(long constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const BigRational& coefficient, const Exponents& exponents);
  /// Lifts a univariate polynomial into variable v.
  static MultiPoly from_unipoly(const UniPoly& p, Var v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the coefficient of the empty monomial).
  BigRational constant_term() const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of v^power, as a polynomial in the remaining variables.
  MultiPoly coefficient(Var v, unsigned power) const;
  /// All coefficients in v, index = power.
  std::vector<MultiPoly> coefficients(Var v) const;

  MultiPoly evaluate(Var v, const BigRational& value) const;
  MultiPoly substitute(Var v, const MultiPoly& replacement) const;
  BigRational evaluate(const Assignment& point) const;

  /// Requires that no variable other than v occurs.
  UniPoly to_unipoly(Var v) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const BigRational& c);
  Terms terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// True iff p - q is the zero polynomial.
bool poly_equal(const MultiPoly& p, const MultiPoly& q);

}  // namespace cesaro
