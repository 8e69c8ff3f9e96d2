#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/exactnum/interpolate.hpp"
#include "cesaro/exactnum/roots.hpp"
#include "cesaro/interrupters.hpp"
#include "cesaro/series_bracket.hpp"

namespace cesaro {

enum class PsdVerdict { positive_definite, positive_semidefinite, indefinite };
const char* to_string(PsdVerdict v);

struct PrincipalMinor {
  std::vector<std::size_t> indices;
  BigRational value;
};

/// All 2^c - 1 principal minors of a symmetric matrix at a fixed alpha.
struct PsdCertificate {
  std::size_t dimension = 0;
  std::vector<PrincipalMinor> minors;
  PsdVerdict verdict = PsdVerdict::indefinite;

  bool positive_semidefinite() const { return verdict != PsdVerdict::indefinite; }
};

/// Throws DomainError unless m is square and symmetric.
PsdCertificate psd_certificate(const RationalMatrix& m);

struct SymbolicMinor {
  std::vector<std::size_t> indices;
  /// The minor as a rational function of alpha.
  UniRational value;
  /// A polynomial with the same sign as `value` wherever the corner is
  /// defined: det of the denominator-cleared block, times the common
  /// denominator when the block has odd size.
  UniPoly sign_poly;

  bool leading() const;
};

struct SymbolicMinorSet {
  unsigned order = 0;
  std::size_t corner_size = 0;
  bool shifted = false;  // minors of Q - I
  /// Monic common denominator of the corner entries (1 when polynomial).
  UniPoly denominator = UniPoly(1);
  std::vector<SymbolicMinor> minors;
};

/// Principal minors of the symbolic corner (k = 3: the fixed corner).
SymbolicMinorSet q_minors_symbolic(unsigned order);
/// Principal minors of corner(Q) - I.
SymbolicMinorSet q_shifted_minors_symbolic(unsigned order);
/// Same, for an explicit symbolic corner.
SymbolicMinorSet minors_of(const SymbolicCorner& corner, bool shifted);

/// Checks the order-three leading minors of Q - I against their factored
/// forms.
bool shifted_minors_regression();
/// Checks the order-three leading minors of Q against their factored forms.
bool q_minors_regression();

/// A connected piece of an alpha range: a single point or an interval.
struct RangeComponent {
  RealPoint left;
  bool left_closed = false;
  RealPoint right;
  bool right_closed = false;
  bool point = false;

  std::string to_string() const;
};

struct AlphaRangeReport {
  std::string condition;
  unsigned order = 0;
  Domain domain;
  std::vector<RangeComponent> components;
  /// The last component reaches the finite right end of the domain and the
  /// condition keeps holding on the whole ray beyond it.
  bool extends_to_infinity = false;

  bool empty() const { return components.empty(); }
  bool contains(const BigRational& alpha) const;
  /// Components joined by " U "; a flagged last component prints as "[a, inf)".
  std::string to_string() const;
};

/// Where every leading principal minor of corner(Q) is > 0.
AlphaRangeReport posinormal_coposinormal_range(unsigned order, const Domain& domain);
/// Sufficient-condition range: every principal minor of corner(Q) - I is >= 0.
AlphaRangeReport hyponormality_range(unsigned order, const Domain& domain);

enum class SignCondition { positive, nonnegative };
/// Range where all the given polynomials satisfy the condition. Points where
/// `undefined_at` vanishes are excluded.
AlphaRangeReport range_where(const std::vector<UniPoly>& polys, SignCondition condition, const Domain& domain,
                             const UniPoly& undefined_at = UniPoly(1));

/// Symbolic check that 0 < p_entry < 1 for n >= 0, alpha > -1: each numerator
/// factor n+m+alpha is positive and falls short of its denominator factor by k.
bool p_dominance_certificate(unsigned order);

enum class CornerChoice { automatic, fixture, solved, identity };
CornerChoice parse_corner_choice(const std::string& text);
const char* to_string(CornerChoice c);

/// Builds P and Q and checks M Q M* = M* P M up to n_check. Automatic picks the
/// fixed corner for order three and a solved one otherwise; solved corners
/// of size k that fail are retried at size k+1.
IdentityReport verify_supraposinormal(unsigned order, const BigRational& alpha, std::size_t n_check,
                                      CornerChoice choice = CornerChoice::automatic, unsigned jobs = 1);

struct DefectReport {
  unsigned order = 0;
  BigRational alpha;
  std::size_t section = 0;
  std::size_t tail_terms = 0;
  /// Smallest eigenvalue of the midpoint section of A*A - AA* (approximate).
  double min_eigenvalue = 0;
  BigRational max_bracket_width;
  /// Midpoint section, row-major.
  std::vector<double> midpoint;
  /// Q - I is positive semidefinite at this alpha.
  bool sufficient_condition_holds = false;
  std::string label;
};

/// Finite-section evidence for hyponormality. (AA*)_{ij} is an exact finite
/// sum; (A*A)_{ij} is bracketed from `tail_terms` exact terms plus a tail bound.
DefectReport finite_section_defect(unsigned order, const BigRational& alpha, std::size_t section,
                                   std::size_t tail_terms, unsigned jobs = 1);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

}  // namespace cesaro
