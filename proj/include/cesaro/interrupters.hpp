#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/cesaro_matrix.hpp"
#include "cesaro/corner.hpp"
#include "cesaro/exactnum/interpolate.hpp"

namespace cesaro {

/// n -> prod_{m=1}^{k} (n+m+alpha) / prod_{m=1}^{k} (n+k+m+alpha).
/// The k = 3 instance is the diagonal used for the order-three operator; the
/// general pattern is an extrapolation that every run re-verifies.
BigRational p_entry(unsigned order, const BigRational& alpha, std::size_t n);

class DiagonalInterrupter {
 public:
  DiagonalInterrupter(unsigned order, BigRational alpha);
  unsigned order() const { return order_; }
  const BigRational& alpha() const { return alpha_; }
  BigRational entry(std::size_t n) const { return p_entry(order_, alpha_, n); }

 private:
  unsigned order_;
  BigRational alpha_;
};

struct InterrupterPair {
  CornerInterrupter q;
  DiagonalInterrupter p;
};

/// The known 3x3 corner for order three, evaluated at alpha.
CornerInterrupter fixture_q_order3(const BigRational& alpha);
/// Same corner with each entry as a polynomial in alpha.
UniPolyMatrix fixture_q_order3_symbolic();

/// Exact (M* P M)_{ij} for a fixed order and alpha.
using ClosedFormProvider = std::function<BigRational(std::size_t, std::size_t)>;

/// Provider backed by the telescoped closed form.
ClosedFormProvider telescoped_closed_form(unsigned order, const BigRational& alpha);

/// The unique symmetric corner Q_c with M_c Q_c M_c^T = S_c, where M_c is the
/// leading c x c block of M and S_c the leading block of M* P M. Two exact
/// triangular solves.
CornerInterrupter solve_corner(unsigned order, const BigRational& alpha, std::size_t corner_size,
                               const ClosedFormProvider& rhs);
CornerInterrupter solve_corner(unsigned order, const BigRational& alpha, std::size_t corner_size);

enum class CornerProvenance { fixture, solved, identity };
const char* to_string(CornerProvenance p);

struct Mismatch {
  std::size_t i = 0;
  std::size_t j = 0;
  BigRational lhs;  // (M Q M*)_{ij}
  BigRational rhs;  // (M* P M)_{ij}
};

struct IdentityReport {
  unsigned order = 0;
  BigRational alpha;
  std::size_t n_check = 0;
  CornerProvenance provenance = CornerProvenance::solved;
  std::size_t corner_size = 0;
  /// True when the default corner size k failed and k+1 was tried.
  bool corner_escalated = false;
  unsigned telescope_escalations = 0;
  std::size_t compared_entries = 0;
  std::optional<Mismatch> mismatch;
  /// The corner that was checked.
  std::optional<CornerInterrupter> corner;

  bool verified() const { return !mismatch.has_value(); }
  std::string status() const;
};

/// Compares (M Q M*)_{ij} with the closed form for all 0 <= i, j <= n_check.
/// Rows may be split across `jobs` threads; the reported mismatch is always
/// the lexicographically first one.
IdentityReport verify_consistency(const CesaroMatrix& m, const InterrupterPair& pair, std::size_t n_check,
                                  const ClosedFormProvider& rhs, unsigned jobs = 1);
IdentityReport verify_consistency(const CesaroMatrix& m, const InterrupterPair& pair, std::size_t n_check,
                                  unsigned jobs = 1);

/// Corner entries as exact rational functions of alpha, reconstructed from
/// solved corners at sample points and checked at held-out points.
struct SymbolicCorner {
  unsigned order = 0;
  std::size_t size = 0;
  std::vector<std::vector<UniRational>> entries;
  unsigned degree_bound = 0;
  std::size_t samples_used = 0;
  bool from_fixture = false;

  /// Evaluates every entry at alpha.
  RationalMatrix at(const BigRational& alpha) const;
};

/// Degree bound starts at 2k+2 and doubles (up to 8k+8) while held-out
/// validation fails. Throws std::runtime_error if no bound validates.
SymbolicCorner interpolate_symbolic_corner(unsigned order, std::size_t corner_size);
SymbolicCorner fixture_symbolic_corner_order3();
/// Fixture for order 3, interpolation otherwise; memoized per (order, size).
const SymbolicCorner& symbolic_corner(unsigned order, std::size_t corner_size);

}  // namespace cesaro
