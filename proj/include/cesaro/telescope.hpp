#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "cesaro/exactnum/multipoly.hpp"
#include "cesaro/exactnum/ratfun.hpp"
#include "cesaro/series_bracket.hpp"

namespace cesaro {

/// Term t of the series for (M* P M)_{ij}, j >= i, with P the order-k
/// diagonal interrupter:
///   k^2 prod_{m=1}^{k-1} (j-i+m+t)(t+m) / prod_{m=1}^{2k} (j+t+m+alpha).
struct SeriesSummand {
  unsigned order = 0;
  RationalFunction value;
};

/// Symbolic in {t, i, j, alpha}.
SeriesSummand summand(unsigned order);
/// Symbolic in {t, alpha}; throws DomainError when i > j.
SeriesSummand summand(unsigned order, std::size_t i, std::size_t j);

/// s(t) = sum_n c_n(i, j, alpha) t^n / prod_{m=1}^{L} (j+t+m+alpha) with
/// s(t) - s(t+1) equal to the summand, so the series sums to s(0).
struct TelescopeForm {
  unsigned order = 0;
  /// c_n, index = power of t; polynomials in {i, j, alpha}.
  std::vector<MultiPoly> coefficients;
  /// L linear factors j + t + m + alpha, m = 1..L.
  std::vector<MultiPoly> denominator_factors;
  /// Number of times the ansatz was enlarged before it solved.
  unsigned escalations = 0;

  unsigned numerator_degree() const { return static_cast<unsigned>(coefficients.size()) - 1; }
  MultiPoly numerator() const;
  RationalFunction as_ratfun() const;
  /// s evaluated at t = 0 for the given alpha, i <= j.
  BigRational at_zero(const BigRational& alpha, std::size_t i, std::size_t j) const;
};

/// Solves the ansatz with the given numerator degree and denominator length.
/// The coefficient identity in t is triangular with rational pivots L - n,
/// so the solve is exact back-substitution over Q[i, j, alpha]. Throws
/// AnsatzFailure when the identity has no solution of that shape.
TelescopeForm solve_telescope(unsigned order, unsigned numerator_degree, unsigned denominator_length);

/// Default shape (degree 2k-2 over 2k-1 factors), with one escalation to
/// (2k-1, 2k) on failure. The result is verified with ratfun_identity.
TelescopeForm solve_telescope(unsigned order);

/// Memoized, thread-safe solve_telescope(order).
std::shared_ptr<const TelescopeForm> cached_telescope(unsigned order);

/// True iff s(t) - s(t+1) equals the summand as rational functions.
bool telescoping_identity_holds(const TelescopeForm& form);

/// s(0) at (min(i,j), max(i,j), alpha): the exact value of (M* P M)_{ij}.
BigRational closed_form_entry(unsigned order, const BigRational& alpha, std::size_t i, std::size_t j);

/// Exact partial sum of the first `terms` summands (lower) plus a tail bound
/// (upper). An oracle for closed_form_entry that shares no code with it.
SumBracket partial_sum_bracket(unsigned order, const BigRational& alpha, std::size_t i, std::size_t j,
                               std::size_t terms);

/// Known order-three coefficients of s(t), index = power of t.
std::vector<MultiPoly> order3_reference_coefficients();
/// Known order-three closed form s(0) for i <= j.
RationalFunction order3_reference_closed_form();

struct Order3Regression {
  /// Per power of t, whether the solved coefficient equals the reference.
  std::vector<bool> coefficients;
  bool closed_form = false;
  bool ok() const;
};

Order3Regression order3_regression(const TelescopeForm& form);

}  // namespace cesaro
