#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include "cesaro/cesaro_matrix.hpp"
#include "cesaro/errors.hpp"
#include "cesaro/interrupters.hpp"
#include "test_support.hpp"

using namespace cesaro;

namespace {

// Explicit entry formulas for orders 1, 2, 3, written out independently.
BigRational order1(const BigRational& a, long i, long j) { return j > i ? BigRational(0) : 1 / (i + 1 + a); }
BigRational order2(const BigRational& a, long i, long j) {
  return j > i ? BigRational(0) : 2 * BigRational(i + 1 - j) / ((i + 1 + a) * (i + 2 + a));
}
BigRational order3(const BigRational& a, long i, long j) {
  return j > i ? BigRational(0) : 3 * BigRational((i + 1 - j) * (i + 2 - j)) / ((i + 1 + a) * (i + 2 + a) * (i + 3 + a));
}

// x_{ij} = (Q M*)_{ij} for the order-three corner.
BigRational x_row(const BigRational& a, long i, long j) {
  BigRational den = 20 * (j + 1 + a) * (j + 2 + a) * (j + 3 + a);
  BigRational jj = j;
  if (i == 0)
    return (10 * jj * jj + (15 * a + 30) * jj + 20 + 24 * a + 6 * a * a) * (1 + a) * (2 + a) * (3 + a) / den;
  if (i == 1)
    return ((10 - 20 * a) * jj * jj + (10 - 50 * a - 30 * a * a) * jj - 33 * a - 45 * a * a - 12 * a * a * a) *
           (2 + a) * (3 + a) / den;
  if (i == 2)
    return ((20 + 10 * a * a) * jj * jj + (-20 + 30 * a + 35 * a * a + 15 * a * a * a) * jj + 18 * a + 39 * a * a +
            27 * a * a * a + 6 * a * a * a * a) *
           (3 + a) / den;
  if (j < i) return 0;
  return 3 * BigRational((j + 1 - i) * (j + 2 - i)) / ((j + 1 + a) * (j + 2 + a) * (j + 3 + a));
}

}  // namespace

TEST_CASE("entry examples") {
  CHECK(entry(3, 0, 2, 0) == rational(3, 5));
  CHECK(entry(3, 0, 0, 0) == 1);
  CHECK(entry(3, rational(7, 3), 1, 2) == 0);
  CHECK(entry(1, 1, 2, 1) == rational(1, 4));
  CHECK_THROWS_AS(entry(3, -1, 0, 0), DomainError);
  CHECK_THROWS_AS(entry(0, 1, 0, 0), DomainError);
}

TEST_CASE("integer-order entries match the explicit low-order formulas") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 60; ++n) {
    BigRational a = testing_support::random_alpha(rng);
    for (long i = 0; i < 8; ++i) {
      for (long j = 0; j < 8; ++j) {
        CHECK(entry(1, a, i, j) == order1(a, i, j));
        CHECK(entry(2, a, i, j) == order2(a, i, j));
        CHECK(entry(3, a, i, j) == order3(a, i, j));
      }
    }
  }
}

TEST_CASE("row sums") {
  for (unsigned k = 1; k <= 5; ++k) {
    CesaroMatrix m(k, 0);
    for (std::size_t i = 0; i <= 100; ++i) {
      BigRational sum = 0;
      for (const auto& v : m.row(i)) sum += v;
      CHECK(sum == 1);
    }
  }
  std::mt19937_64 rng(8);
  for (int n = 0; n < 20; ++n) {
    BigRational a = testing_support::random_alpha(rng);
    unsigned k = 1 + n % 5;
    CesaroMatrix m(k, a);
    for (std::size_t i = 0; i < 20; ++i) {
      BigRational sum = 0;
      for (const auto& v : m.row(i)) sum += v;
      BigRational expected = 1;
      for (unsigned q = 1; q <= k; ++q) expected *= BigRational(static_cast<unsigned long>(i + q)) / (i + q + a);
      CHECK(sum == expected);
    }
  }
}

TEST_CASE("lower triangular and positive") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> idx(0, 60);
  for (int n = 0; n < 500; ++n) {
    unsigned k = 1 + n % 5;
    BigRational a = testing_support::random_alpha(rng);
    std::size_t i = idx(rng);
    std::size_t j = idx(rng);
    if (j > i) {
      CHECK(entry(k, a, i, j) == 0);
    } else if (a >= 0) {
      CHECK(entry(k, a, i, j) > 0);
    }
  }
}

TEST_CASE("entry_general_beta") {
  CHECK(entry_general_beta(0, 3, 2, 0) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(entry_general_beta(0, 1, 4, 4) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(entry_general_beta(0, 2, 1, 3) == 0);
  // beta Gamma(i-j+beta) Gamma(i+alpha+1) / (Gamma(i-j+1) Gamma(i+alpha+beta+1)) with std::tgamma.
  long double g = 2.5L * std::tgamma(4.5L) * std::tgamma(4.5L) / (std::tgamma(3.0L) * std::tgamma(7.0L));
  CHECK(std::fabs(entry_general_beta(0.5, 2.5, 3, 1) - static_cast<double>(g)) <= 1e-10 * static_cast<double>(g));
  CHECK_THROWS_AS(entry_general_beta(-1, 2, 1, 0), DomainError);
  CHECK_THROWS_AS(entry_general_beta(0, 0, 1, 0), DomainError);
}

TEST_CASE("entry_general_beta agrees with exact integer-order entries") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> idx(0, 200);
  for (int n = 0; n < 500; ++n) {
    unsigned k = 1 + n % 5;
    BigRational a = testing_support::random_alpha(rng);
    std::size_t i = idx(rng);
    std::size_t j = idx(rng) % (i + 1);
    double exact = to_double(entry(k, a, i, j));
    double approx = entry_general_beta(to_double(a), k, i, j);
    CHECK(std::fabs(approx - exact) <= 1e-10 * std::fabs(exact));
  }
  for (std::size_t i : {1000UL, 5000UL, 10000UL}) {
    double exact = to_double(entry(3, rational(1, 3), i, i / 2));
    CHECK(std::fabs(entry_general_beta(1.0 / 3.0, 3, i, i / 2) - exact) <= 1e-12 * exact);
  }
}

TEST_CASE("truncate") {
  auto one = truncate(CesaroMatrix(3, 0), 1);
  CHECK(one.size() == 1);
  CHECK(one(0, 0) == 1);
  auto three = truncate(CesaroMatrix(3, 0), 3);
  CHECK(three(2, 0) == rational(3, 5));
  CHECK(three(2, 1) == rational(3, 10));
  CHECK(three(2, 2) == rational(1, 10));
  auto two = truncate(CesaroMatrix(2, 0), 2);
  CHECK(two.values() == RationalMatrix::from_rows({{1, 0}, {rational(2, 3), rational(1, 3)}}));
}

TEST_CASE("mqm_star_entry") {
  CesaroMatrix m1(3, 1);
  CHECK(mqm_star_entry(m1, fixture_q_order3(1), 0, 0) == rational(5, 8));
  CHECK(mqm_star_entry(CesaroMatrix(3, 0), fixture_q_order3(0), 0, 0) == 1);
  CesaroMatrix m(3, rational(2, 7));
  CHECK(mqm_star_entry(m, CornerInterrupter::identity(3), 0, 1) == m.entry(0, 0) * m.entry(1, 0));

  std::mt19937_64 rng(31);
  for (int n = 0; n < 10; ++n) {
    BigRational a = testing_support::random_alpha(rng);
    CesaroMatrix mm(1 + n % 5, a);
    auto q = fixture_q_order3(a);
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t j = 0; j < 9; ++j) {
        // Identity corner: plain inner product of truncated rows.
        BigRational brute = 0;
        for (std::size_t u = 0; u <= std::min(i, j); ++u) brute += mm.entry(i, u) * mm.entry(j, u);
        CHECK(mqm_star_entry(mm, CornerInterrupter::identity(2), i, j) == brute);
        CHECK(mqm_star_entry(mm, q, i, j) == mqm_star_entry(mm, q, j, i));
      }
    }
  }
}

TEST_CASE("qm_star_entry reproduces the X table") {
  CHECK(qm_star_entry(fixture_q_order3(0), CesaroMatrix(3, 0), 0, 0) == 1);
  CHECK(qm_star_entry(fixture_q_order3(rational(5, 3)), CesaroMatrix(3, rational(5, 3)), 5, 3) == 0);
  CHECK(qm_star_entry(fixture_q_order3(1), CesaroMatrix(3, 1), 4, 4) == rational(1, 56));
  for (BigRational a : {rational(-3, 4), rational(0), rational(1, 2), rational(2), rational(19, 7)}) {
    CesaroMatrix m(3, a);
    auto q = fixture_q_order3(a);
    for (long i = 0; i < 8; ++i)
      for (long j = 0; j < 12; ++j) CHECK(qm_star_entry(q, m, i, j) == x_row(a, i, j));
  }
}

TEST_CASE("memoized rows are shared and consistent across threads") {
  CesaroMatrix m(4, rational(1, 3));
  CesaroMatrix copy = m;
  std::vector<std::thread> pool;
  std::vector<BigRational> seen(8);
  for (int w = 0; w < 8; ++w) pool.emplace_back([&, w] { seen[w] = copy.row(50 + w)[10]; });
  for (auto& t : pool) t.join();
  for (int w = 0; w < 8; ++w) CHECK(seen[w] == entry(4, rational(1, 3), 50 + w, 10));
  CHECK(&m.row(52) == &copy.row(52));
}
