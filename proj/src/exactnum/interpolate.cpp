#include "cesaro/exactnum/interpolate.hpp"

#include "cesaro/errors.hpp"
#include "cesaro/exactnum/matrix.hpp"

namespace cesaro {

std::string UniRational::to_string(std::string_view variable) const {
  if (is_polynomial()) return num.to_string(variable);
  return "(" + num.to_string(variable) + ") / (" + den.to_string(variable) + ")";
}

UniRational reduce(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) return UniRational{UniPoly(), UniPoly(1)};
  UniPoly g = gcd(num, den);
  UniPoly n = exact_divide(num, g);
  UniPoly d = exact_divide(den, g);
  BigRational lead = d.leading();
  return UniRational{n * UniPoly(BigRational(1 / lead)), d.monic()};
}

UniPoly interpolate_polynomial(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolation: mismatched sample sizes");
  std::size_t n = xs.size();
  if (n == 0) return {};
  std::vector<BigRational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t r = n - 1; r >= level; --r) {
      BigRational gap = xs[r] - xs[r - level];
      if (gap == 0) throw DomainError("interpolation: repeated node");
      dd[r] = (dd[r] - dd[r - 1]) / gap;
    }
  }
  UniPoly p;
  for (std::size_t r = n; r-- > 0;) {
    p *= UniPoly(std::vector<BigRational>{-xs[r], 1});
    p += UniPoly(dd[r]);
  }
  return p;
}

std::optional<UniRational> interpolate_rational(const std::vector<BigRational>& xs,
                                                const std::vector<BigRational>& ys, unsigned degree_bound) {
  if (xs.size() != ys.size()) throw DomainError("interpolation: mismatched sample sizes");
  std::size_t terms = degree_bound + 1;
  RationalMatrix system(xs.size(), 2 * terms);
  for (std::size_t s = 0; s < xs.size(); ++s) {
    BigRational power = 1;
    for (std::size_t d = 0; d < terms; ++d) {
      system(s, d) = power;
      system(s, terms + d) = -ys[s] * power;
      power *= xs[s];
    }
  }
  auto basis = nullspace(system);
  for (const auto& v : basis) {
    UniPoly num(std::vector<BigRational>(v.begin(), v.begin() + static_cast<long>(terms)));
    UniPoly den(std::vector<BigRational>(v.begin() + static_cast<long>(terms), v.end()));
    if (den.is_zero()) continue;
    UniRational r = reduce(num, den);
    bool fits = true;
    for (std::size_t s = 0; s < xs.size() && fits; ++s) {
      fits = r.den(xs[s]) != 0 && r(xs[s]) == ys[s];
    }
    if (fits) return r;
  }
  return std::nullopt;
}

}  // namespace cesaro
