#pragma once

#include <string>
#include <vector>

#include "cesaro/exactnum/multipoly.hpp"

namespace cesaro {

/// Quotient of MultiPolys. The denominator is kept as a list of factors
/// (each normalized so its leading term has coefficient 1); scalar content is
/// folded into the numerator. Products of linear factors built from operator
/// formulas are therefore never expanded unless asked for.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(MultiPoly numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(MultiPoly numerator, std::vector<MultiPoly> denominator_factors);

  const MultiPoly& numerator() const { return num_; }
  const std::vector<MultiPoly>& denominator_factors() const { return den_; }
  MultiPoly denominator() const;

  RationalFunction substitute(Var v, const MultiPoly& replacement) const;
  RationalFunction evaluate(Var v, const BigRational& value) const;
  /// Throws DomainError if the denominator vanishes at the point.
  BigRational evaluate(const Assignment& point) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);

  std::string to_string() const;

 private:
  void add_factor(const MultiPoly& factor);
  MultiPoly num_;
  std::vector<MultiPoly> den_;
};

/// f == g as rational functions, decided by cross-multiplication after
/// cancelling the factors the two denominators share.
bool ratfun_identity(const RationalFunction& f, const RationalFunction& g);

}  // namespace cesaro
