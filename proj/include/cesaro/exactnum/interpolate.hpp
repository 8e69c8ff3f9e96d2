#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cesaro/exactnum/unipoly.hpp"

namespace cesaro {

/// Reduced univariate rational function num/den with monic den.
struct UniRational {
  UniPoly num;
  UniPoly den = UniPoly(1);

  bool is_polynomial() const { return den.degree() == 0; }
  BigRational operator()(const BigRational& x) const { return num(x) / den(x); }
  std::string to_string(std::string_view variable = "alpha") const;
};

/// Lowest-terms form: cancels gcd(num, den) and makes den monic.
UniRational reduce(const UniPoly& num, const UniPoly& den);

/// Newton interpolation through distinct nodes.
UniPoly interpolate_polynomial(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys);

/// Rational interpolation with deg num, deg den <= degree_bound from
/// 2*degree_bound + 2 samples, via the nullspace of the linearized system
/// num(x) - y*den(x) = 0. Returns nullopt when no such function fits.
std::optional<UniRational> interpolate_rational(const std::vector<BigRational>& xs,
                                                const std::vector<BigRational>& ys, unsigned degree_bound);

}  // namespace cesaro
