#include <doctest.h>

#include <random>

#include "cesaro/errors.hpp"
#include "cesaro/interrupters.hpp"
#include "cesaro/telescope.hpp"
#include "test_support.hpp"

using namespace cesaro;
using testing_support::lin;
using testing_support::poly;

namespace {

// The known order-three corner, entry by entry, evaluated directly.
RationalMatrix known_corner(const BigRational& a) {
  BigRational c = (1 + a) * (2 + a) * (3 + a);
  BigRational q00 = (10 + 12 * a + 3 * a * a) * c / 60;
  BigRational q01 = -a * (11 + 4 * a) * c / 40;
  BigRational q02 = a * (3 + 2 * a) * c / 40;
  BigRational q11 = (5 - a + 15 * a * a + 6 * a * a * a) * (2 + a) * (3 + a) / 30;
  BigRational q12 = -a * c * (1 + 4 * a) / 40;
  BigRational q22 = (20 - 6 * a + 7 * a * a + 6 * a * a * a + 3 * a * a * a * a) * (3 + a) / 60;
  return RationalMatrix::from_rows({{q00, q01, q02}, {q01, q11, q12}, {q02, q12, q22}});
}

const std::vector<BigRational> kSamples = {rational(-3, 4), rational(-1, 2), rational(-1, 4), rational(0),
                                           rational(1, 4),  rational(1, 2),  rational(1),     rational(3, 2),
                                           rational(5, 2),  rational(10)};

}  // namespace

TEST_CASE("p_entry") {
  CHECK(p_entry(3, 0, 0) == rational(1, 20));
  CHECK(p_entry(1, 0, 0) == rational(1, 2));
  CHECK(p_entry(3, 0, 100000) < 1);
  CHECK_THROWS_AS(p_entry(3, -1, 0), DomainError);
  CHECK_THROWS_AS(p_entry(0, 1, 0), DomainError);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> idx(0, 1000);
  for (int n = 0; n < 200; ++n) {
    unsigned k = 1 + n % 5;
    BigRational a = testing_support::random_alpha(rng);
    std::size_t i = idx(rng);
    BigRational p = p_entry(k, a, i);
    CHECK(p > 0);
    CHECK(p < 1);
    CHECK(p_entry(k, a, i + 1) > p);
  }
  // (n+1+a)(n+2+a)(n+3+a) / ((n+4+a)(n+5+a)(n+6+a))
  BigRational a = rational(2, 9);
  for (long n = 0; n < 10; ++n)
    CHECK(p_entry(3, a, n) == (n + 1 + a) * (n + 2 + a) * (n + 3 + a) / ((n + 4 + a) * (n + 5 + a) * (n + 6 + a)));
}

TEST_CASE("fixed order-three corner") {
  CHECK(fixture_q_order3(0).corner() == RationalMatrix::identity(3));
  CHECK(fixture_q_order3(1).corner() == RationalMatrix::from_rows({{10, -9, 3}, {-9, 10, -3}, {3, -3, 2}}));
  // (10 - 6 + 3/4)(1/2)(3/2)(5/2)/60 = (19/4)(15/8)/60
  CHECK(fixture_q_order3(rational(-1, 2)).corner()(0, 0) == rational(19, 128));
  std::mt19937_64 rng(43);
  for (int n = 0; n < 50; ++n) {
    BigRational a = testing_support::random_alpha(rng);
    auto q = fixture_q_order3(a);
    CHECK(q.corner().is_symmetric());
    CHECK(q.corner() == known_corner(a));
    CHECK(q.entry(7, 7) == 1);
    CHECK(q.entry(1, 7) == 0);
  }
}

TEST_CASE("corner interrupter validation") {
  CHECK_THROWS_AS(CornerInterrupter(RationalMatrix::from_rows({{1, 2}, {3, 4}})), DomainError);
  CHECK_THROWS_AS(CornerInterrupter{RationalMatrix{}}, DomainError);
}

TEST_CASE("solve_corner") {
  // Order one: q00 = 1 + alpha.
  for (BigRational a : {rational(-1, 2), rational(0), rational(7, 3), rational(5)})
    CHECK(solve_corner(1, a, 1).corner()(0, 0) == 1 + a);
  CHECK(solve_corner(3, 1, 3).corner() == RationalMatrix::from_rows({{10, -9, 3}, {-9, 10, -3}, {3, -3, 2}}));
  CHECK(solve_corner(3, 0, 3).corner() == RationalMatrix::identity(3));
  for (const auto& a : kSamples) CHECK(solve_corner(3, a, 3).corner() == known_corner(a));
  CHECK(solve_corner(4, rational(1, 3), 4) == solve_corner(4, rational(1, 3), 4));
  CHECK_THROWS_AS(solve_corner(3, 1, 0), DomainError);
}

TEST_CASE("solved corners are positive definite") {
  for (unsigned k = 1; k <= 5; ++k) {
    for (BigRational a : {rational(-9, 10), rational(-1, 2), rational(1, 3), rational(4)}) {
      auto c = solve_corner(k, a, k).corner();
      for (std::size_t s = 1; s <= k; ++s) {
        std::vector<std::size_t> lead(s);
        for (std::size_t n = 0; n < s; ++n) lead[n] = n;
        CHECK(determinant(c.principal_submatrix(lead)) > 0);
      }
    }
  }
}

TEST_CASE("verify_consistency") {
  BigRational half = rational(1, 2);
  CesaroMatrix m3(3, half);
  InterrupterPair pair{fixture_q_order3(half), DiagonalInterrupter(3, half)};
  auto report = verify_consistency(m3, pair, 40);
  CHECK(report.verified());
  CHECK(report.compared_entries == 41 * 41);

  CesaroMatrix m1(3, 1);
  auto bad = verify_consistency(m1, InterrupterPair{CornerInterrupter::identity(3), DiagonalInterrupter(3, 1)}, 5);
  REQUIRE(bad.mismatch.has_value());
  CHECK(bad.mismatch->i == 0);
  CHECK(bad.mismatch->j == 0);
  CHECK(bad.mismatch->lhs == rational(1, 16));
  CHECK(bad.mismatch->rhs == rational(5, 8));

  // Threads do not change which mismatch is reported.
  auto threaded = verify_consistency(m1, InterrupterPair{CornerInterrupter::identity(3), DiagonalInterrupter(3, 1)}, 5,
                                     4);
  REQUIRE(threaded.mismatch.has_value());
  CHECK(threaded.mismatch->i == 0);
  CHECK(threaded.mismatch->j == 0);

  CesaroMatrix mk1(1, 2);
  auto order1 = verify_consistency(mk1, InterrupterPair{solve_corner(1, 2, 1), DiagonalInterrupter(1, 2)}, 40);
  CHECK(order1.verified());
}

TEST_CASE("solved corners round-trip through the identity") {
  for (const auto& a : {rational(-2, 3), rational(1, 5), rational(7, 2)}) {
    CesaroMatrix m(3, a);
    auto solved = solve_corner(3, a, 3);
    CHECK(solved == fixture_q_order3(a));
    CHECK(verify_consistency(m, InterrupterPair{solved, DiagonalInterrupter(3, a)}, 40).verified());
  }
}

TEST_CASE("symbolic corner by interpolation reproduces the fixed formulas") {
  auto sym = interpolate_symbolic_corner(3, 3);
  CHECK_FALSE(sym.from_fixture);
  UniPoly c = lin(1) * lin(2) * lin(3);
  UniPoly a = UniPoly::x();
  auto scaled = [](const UniPoly& p, long num, long den) { return p * UniPoly(rational(num, den)); };
  std::vector<std::vector<UniPoly>> expected = {
      {scaled(poly({10, 12, 3}) * c, 1, 60), scaled(a * poly({11, 4}) * c, -1, 40), scaled(a * poly({3, 2}) * c, 1, 40)},
      {{}, scaled(poly({5, -1, 15, 6}) * lin(2) * lin(3), 1, 30), scaled(a * c * poly({1, 4}), -1, 40)},
      {{}, {}, scaled(poly({20, -6, 7, 6, 3}) * lin(3), 1, 60)}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t col = r; col < 3; ++col) {
      CHECK(sym.entries[r][col].is_polynomial());
      CHECK(sym.entries[r][col].num == expected[r][col]);
      CHECK(sym.entries[col][r].num == expected[r][col]);
    }
  }
}

TEST_CASE("symbolic corners for other orders evaluate to solved corners") {
  for (unsigned k : {1U, 2U, 4U}) {
    const auto& sym = symbolic_corner(k, k);
    for (BigRational a : {rational(-5, 7), rational(11, 3)}) CHECK(sym.at(a) == solve_corner(k, a, k).corner());
  }
  CHECK(symbolic_corner(3, 3).from_fixture);
  CHECK(symbolic_corner(1, 1).entries[0][0].num == lin(1));
}
