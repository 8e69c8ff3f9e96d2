#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cesaro/errors.hpp"
#include "cesaro/exactnum/interpolate.hpp"
#include "cesaro/exactnum/matrix.hpp"
#include "cesaro/exactnum/multipoly.hpp"
#include "cesaro/exactnum/ratfun.hpp"
#include "cesaro/exactnum/roots.hpp"
#include "test_support.hpp"

using namespace cesaro;
using testing_support::lin;
using testing_support::poly;

namespace {

const MultiPoly A = MultiPoly::variable(Var::alpha);
const MultiPoly I = MultiPoly::variable(Var::i);
const MultiPoly T = MultiPoly::variable(Var::t);

// Cofactor expansion, independent of the elimination code.
BigRational cofactor_det(const std::vector<std::vector<BigRational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigRational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigRational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigRational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    BigRational term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : BigRational(-term);
  }
  return det;
}

MultiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 2);
  MultiPoly p;
  for (int n = 0; n < 4; ++n) {
    MultiPoly::Exponents e{static_cast<std::uint16_t>(deg(rng)), static_cast<std::uint16_t>(deg(rng)),
                static_cast<std::uint16_t>(deg(rng)), static_cast<std::uint16_t>(deg(rng))};
    p += MultiPoly::monomial(testing_support::random_rational(rng, 9, 4), e);
  }
  return p;
}

// Rational sample strictly inside an interval piece.
BigRational sample_inside(const DomainPiece& piece, std::mt19937_64& rng) {
  auto lower = [](RealPoint p) -> BigRational {
    if (auto* r = std::get_if<BigRational>(&p)) return *r;
    return std::get<IsolatedRoot>(p).hi;
  };
  BigRational a = lower(piece.left);
  BigRational b;
  if (std::holds_alternative<PlusInfinity>(piece.right)) {
    b = a + 50;
  } else if (auto* r = std::get_if<BigRational>(&piece.right)) {
    b = *r;
  } else {
    b = std::get<IsolatedRoot>(piece.right).lo;
  }
  std::uniform_int_distribution<long> u(1, 999);
  return a + (b - a) * rational(u(rng), 1000);
}

}  // namespace

TEST_CASE("rationals are canonical and parse exactly") {
  CHECK(rational(6, -4) == rational(-3, 2));
  CHECK(to_string(rational(6, -4)) == "-3/2");
  CHECK(parse_rational("3/6") == rational(1, 2));
  CHECK(parse_rational("-0.25") == rational(-1, 4));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(parse_rational("-3/4") == rational(-3, 4));
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK_THROWS_AS(parse_rational("1e-3"), DomainError);
  CHECK(simplest_between(rational(1, 3), rational(1, 2)) == rational(2, 5));
  CHECK(floor(rational(-3, 2)) == -2);
  CHECK(ceil(rational(-3, 2)) == -1);
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 100000);
  for (int n = 0; n < 1000; ++n) {
    BigRational q = rational(num(rng), den(rng) * (n % 2 == 0 ? 1 : -1));
    CHECK(q.get_den() > 0);
    BigInteger g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    CHECK((q == 0 || g == 1));
    CHECK(rational(q.get_num(), q.get_den()) == q);
    MultiPoly p = random_poly(rng);
    MultiPoly again = p + MultiPoly(0);
    CHECK(again == p);
    CHECK(again.to_string() == p.to_string());
  }
}

TEST_CASE("poly_equal") {
  CHECK(poly_equal(pow(A + MultiPoly(1), 2), A * A + MultiPoly(2) * A + MultiPoly(1)));
  CHECK(poly_equal(A * I, I * A));
  CHECK_FALSE(poly_equal(A, A + MultiPoly(0) * I + MultiPoly(1)));
}

TEST_CASE("ratfun_identity examples") {
  RationalFunction a(MultiPoly(1), {T + MultiPoly(1)});
  RationalFunction b(MultiPoly(1), {T + MultiPoly(2)});
  RationalFunction ab(MultiPoly(1), {T + MultiPoly(1), T + MultiPoly(2)});
  CHECK(ratfun_identity(a - b, ab));
  CHECK(ratfun_identity(RationalFunction(A * A - MultiPoly(1), {A - MultiPoly(1)}), RationalFunction(A + MultiPoly(1))));
  CHECK_FALSE(ratfun_identity(a, b));
}

TEST_CASE("ratfun_identity is an equivalence on random triples") {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 40; ++n) {
    MultiPoly num = random_poly(rng);
    MultiPoly f1 = A + I + MultiPoly(n + 1);
    MultiPoly f2 = T + MultiPoly(2);
    MultiPoly g = random_poly(rng);
    if (g.is_zero()) g = MultiPoly(3);
    RationalFunction x(num, {f1});
    RationalFunction y(num * g, {f1, g});  // same function, different presentation
    RationalFunction z(num * f2, {f2, f1});
    CHECK(ratfun_identity(x, x));
    CHECK(ratfun_identity(x, y) == ratfun_identity(y, x));
    CHECK(ratfun_identity(x, y));
    CHECK(ratfun_identity(y, z));
    CHECK(ratfun_identity(x, z));
    RationalFunction w(num + MultiPoly(1), {f1});
    CHECK_FALSE(ratfun_identity(x, w));
  }
}

TEST_CASE("multipoly substitution and evaluation") {
  MultiPoly p = A * I + T * T - MultiPoly(3);
  Assignment at{rational(1, 2), 4, 0, 3};
  CHECK(p.evaluate(at) == rational(1, 2) * 4 + 9 - 3);
  MultiPoly q = p.substitute(Var::t, I + MultiPoly(1));
  CHECK(poly_equal(q, A * I + I * I + MultiPoly(2) * I + MultiPoly(1) - MultiPoly(3)));
  CHECK(p.degree(Var::t) == 2);
  CHECK(p.total_degree() == 2);
}

TEST_CASE("univariate division, gcd and square-free decomposition") {
  UniPoly x = UniPoly::x();
  UniPoly p = pow(lin(-1), 3) * pow(lin(2), 2) * x;
  auto [q, r] = divmod(p, lin(2));
  CHECK(r.is_zero());
  CHECK(q * lin(2) == p);
  CHECK(gcd(p, p.derivative()) == (pow(lin(-1), 2) * lin(2)).monic());
  auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == x);
  CHECK(parts[1] == lin(2));
  CHECK(parts[2] == lin(-1));
  CHECK(squarefree_part(p) == (lin(-1) * lin(2) * x).monic());
  CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), DomainError);
  CHECK_THROWS(exact_divide(x, lin(1)));
}

TEST_CASE("Sturm root counts") {
  UniPoly p = lin(-1) * lin(-2) * lin(-3);
  CHECK(count_roots_open(p, 0, 10) == 3);
  CHECK(count_roots_open(p, 1, 3) == 1);  // endpoints are not counted
  CHECK(count_roots_above(p, 2) == 1);
  CHECK(count_roots_open(poly({-2, 0, 1}), 0, 2) == 1);
}

TEST_CASE("isolate_roots examples") {
  Domain d = Domain::parse("(-1, inf)");
  UniPoly a = UniPoly::x();

  auto iso = isolate_roots(lin(-1) * a * a * lin(1), d);
  REQUIRE(iso.rational.size() == 2);
  CHECK(iso.irrational.empty());
  CHECK(iso.rational[0].value == 0);
  CHECK(iso.rational[0].multiplicity == 2);
  CHECK(iso.rational[1].value == 1);
  CHECK(iso.rational[1].multiplicity == 1);

  auto sqrt2 = isolate_roots(poly({-2, 0, 1}), d);
  CHECK(sqrt2.rational.empty());
  REQUIRE(sqrt2.irrational.size() == 1);
  const auto& r = sqrt2.irrational[0].root;
  CHECK(r.lo * r.lo < 2);
  CHECK(r.hi * r.hi > 2);
  CHECK(r.width() <= rational(1, 1024));

  UniPoly quartic = poly({2308, 1860, 521, 60, 3});
  CHECK(isolate_roots(quartic, d).distinct_count() == 0);
  CHECK(quartic(-1) > 0);
  CHECK(quartic(0) > 0);
  CHECK(quartic(10) > 0);

  CHECK_THROWS_AS(isolate_roots(UniPoly(), d), DomainError);
}

TEST_CASE("isolate_roots recovers constructed rational roots") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> mult(1, 3);
  Domain d = Domain::parse("(-100, inf)");
  for (int n = 0; n < 200; ++n) {
    std::map<BigRational, unsigned> expected;
    UniPoly p = UniPoly(testing_support::random_rational(rng, 5, 3) + (n % 2 == 0 ? 7 : -7));
    int factors = count(rng);
    for (int f = 0; f < factors; ++f) {
      BigRational root = testing_support::random_rational(rng, 40, 7);
      unsigned m = static_cast<unsigned>(mult(rng));
      expected[root] += m;
      p *= pow(UniPoly(std::vector<BigRational>{-root, 1}), m);
    }
    auto iso = isolate_roots(p, d);
    CHECK(iso.irrational.empty());
    std::map<BigRational, unsigned> found;
    for (const auto& r : iso.rational) found[r.value] = r.multiplicity;
    CHECK(found == expected);
  }
}

TEST_CASE("isolating intervals are disjoint and avoid rational roots") {
  UniPoly p = poly({-2, 0, 1}) * poly({-3, 0, 1}) * lin(-1) * poly({-1, -1, 1});  // sqrt2, sqrt3, 1, golden ratio
  auto iso = isolate_roots(p, Domain::parse("(0, 10]"));
  CHECK(iso.rational.size() == 1);
  REQUIRE(iso.irrational.size() == 3);
  for (std::size_t a = 0; a < iso.irrational.size(); ++a) {
    const auto& ra = iso.irrational[a].root;
    CHECK_FALSE((ra.lo < 1 && 1 < ra.hi));
    for (std::size_t b = a + 1; b < iso.irrational.size(); ++b) {
      const auto& rb = iso.irrational[b].root;
      CHECK((ra.hi <= rb.lo || rb.hi <= ra.lo));
    }
  }
}

TEST_CASE("sign_between_roots examples") {
  Domain d = Domain::parse("(-1, inf)");
  UniPoly a = UniPoly::x();
  UniPoly p = lin(-1) * a * a;
  auto pieces = sign_between_roots(p, isolate_roots(p, d), d);
  REQUIRE(pieces.size() == 5);
  std::string text;
  for (const auto& s : pieces) text += s.piece.to_string() + ":" + sign_symbol(s.sign) + " ";
  CHECK(text == "(-1, 0):- {0}:0 (0, 1):- {1}:0 (1, inf):+ ");

  auto constant = sign_between_roots(UniPoly(1), isolate_roots(UniPoly(1), d), d);
  REQUIRE(constant.size() == 1);
  CHECK(constant[0].sign == Sign::positive);

  UniPoly shifted_det = lin(-2) * pow(lin(-1), 2) * pow(a, 3) * pow(lin(1), 2) * lin(2);
  auto s = sign_between_roots(shifted_det, isolate_roots(shifted_det, d), d);
  REQUIRE(s.size() == 7);
  CHECK(s[0].sign == Sign::positive);  // (-1, 0), sample -1/2
  CHECK(shifted_det(rational(-1, 2)) > 0);
  CHECK(s[1].sign == Sign::zero);
  CHECK(s[2].sign == Sign::negative);  // (0, 1), sample 1/2
  CHECK(shifted_det(rational(1, 2)) < 0);
  CHECK(s[3].sign == Sign::zero);
  CHECK(s[4].sign == Sign::negative);  // (1, 2), sample 3/2
  CHECK(shifted_det(rational(3, 2)) < 0);
  CHECK(s[5].sign == Sign::zero);
  CHECK(s[6].sign == Sign::positive);  // (2, inf), sample 3
  CHECK(shifted_det(3) > 0);
}

TEST_CASE("sign_between_roots agrees with direct evaluation") {
  std::mt19937_64 rng(99);
  Domain d = Domain::parse("(-5, 20]");
  std::vector<UniPoly> polys = {poly({-2, 0, 1}) * lin(-3), poly({1, -5, 0, 1}), lin(1) * lin(-4) * poly({-7, 0, 1}),
                                poly({3, 0, 1}) * lin(-10)};
  for (const auto& p : polys) {
    auto pieces = sign_between_roots(p, isolate_roots(p, d), d);
    for (const auto& s : pieces) {
      if (s.piece.point) {
        if (auto* r = std::get_if<BigRational>(&s.piece.left)) CHECK(p(*r) == 0);
        CHECK(s.sign == Sign::zero);
        continue;
      }
      for (int n = 0; n < 10; ++n) CHECK(to_sign(p.sign_at(sample_inside(s.piece, rng))) == s.sign);
    }
  }
}

TEST_CASE("domain parsing") {
  Domain d = Domain::parse("(-1,10]");
  CHECK(d.lo == -1);
  CHECK_FALSE(d.lo_closed);
  REQUIRE(d.hi.has_value());
  CHECK(*d.hi == 10);
  CHECK(d.hi_closed);
  CHECK(d.contains(10));
  CHECK_FALSE(d.contains(-1));
  CHECK(Domain::parse("[0, oo)").contains(1000));
  CHECK(Domain::parse("(2,2)").empty());
  CHECK_THROWS_AS(Domain::parse("0,1"), DomainError);
}

TEST_CASE("dense matrices") {
  auto m = RationalMatrix::from_rows({{2, 1, 0}, {1, 3, rational(1, 2)}, {0, rational(1, 2), 4}});
  CHECK(determinant(m) == cofactor_det(m.to_rows()));
  CHECK(m.is_symmetric());
  CHECK(m * RationalMatrix::identity(3) == m);

  auto singular = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(determinant(singular) == 0);
  auto basis = nullspace(singular);
  REQUIRE(basis.size() == 1);
  for (std::size_t r = 0; r < 3; ++r) {
    BigRational acc = 0;
    for (std::size_t c = 0; c < 3; ++c) acc += singular(r, c) * basis[0][c];
    CHECK(acc == 0);
  }

  auto lower = RationalMatrix::from_rows({{2, 0}, {1, 4}});
  auto x = forward_substitute(lower, {4, 6});
  CHECK(x[0] == 2);
  CHECK(x[1] == 1);

  auto sets = principal_index_sets(3);
  REQUIRE(sets.size() == 7);
  CHECK(sets[0] == std::vector<std::size_t>{0});
  CHECK(sets[3] == std::vector<std::size_t>{0, 1});
  CHECK(sets[6] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("Bareiss determinant matches pointwise determinants") {
  UniPoly a = UniPoly::x();
  UniPolyMatrix m = {{lin(1), a * a, UniPoly(3)}, {lin(-2), lin(5), a}, {UniPoly(1), a * lin(1), lin(7)}};
  UniPoly det = polynomial_determinant(m);
  for (long v = -3; v <= 3; ++v) {
    std::vector<std::vector<BigRational>> at(3, std::vector<BigRational>(3));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) at[r][c] = m[r][c](v);
    CHECK(det(v) == cofactor_det(at));
  }
}

TEST_CASE("interpolation") {
  std::vector<BigRational> xs;
  std::vector<BigRational> ys;
  UniPoly target = poly({3, -1, 0, 2});
  for (long v = 0; v < 4; ++v) {
    xs.push_back(v);
    ys.push_back(target(v));
  }
  CHECK(interpolate_polynomial(xs, ys) == target);

  // (x + 1) / (x^2 + 3)
  xs.clear();
  ys.clear();
  for (long v = 0; v < 6; ++v) {
    xs.push_back(rational(v, 3));
    ys.push_back(lin(1)(xs.back()) / poly({3, 0, 1})(xs.back()));
  }
  auto fit = interpolate_rational(xs, ys, 2);
  REQUIRE(fit.has_value());
  CHECK(fit->num == lin(1));
  CHECK(fit->den == poly({3, 0, 1}));
  CHECK_FALSE(fit->is_polynomial());
}
