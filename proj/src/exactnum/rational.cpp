#include "cesaro/exactnum/rational.hpp"

#include <cctype>

#include "cesaro/errors.hpp"

namespace cesaro {

BigRational rational(long numerator, long denominator) {
  return rational(BigInteger(numerator), BigInteger(denominator));
}

BigRational rational(const BigInteger& numerator, const BigInteger& denominator) {
  if (denominator == 0) throw DomainError("rational: zero denominator");
  BigRational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInteger parse_integer(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("not a rational number: '" + std::string(original) + "'");
  BigInteger v(std::string(s), 10);
  return negative ? BigInteger(-v) : v;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty rational string");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInteger num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw DomainError("not a rational number: '" + std::string(text) + "'");
    BigInteger den(std::string(den_text), 10);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw DomainError("not a rational number: '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    BigInteger num(digits, 10);
    BigInteger den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    if (negative) num = -num;
    return rational(num, den);
  }

  return BigRational(parse_integer(text, text));
}

std::string to_string(const BigRational& value) { return value.get_str(10); }

int sign(const BigRational& value) { return sgn(value); }

BigInteger floor(const BigRational& value) {
  BigInteger q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInteger ceil(const BigRational& value) {
  BigInteger q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigRational abs(const BigRational& value) { return value < 0 ? BigRational(-value) : value; }

double to_double(const BigRational& value) { return value.get_d(); }

BigInteger scaled_floor(const BigRational& value, unsigned exponent) {
  BigInteger shifted = value.get_num();
  shifted <<= exponent;
  BigInteger q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInteger scaled_ceil(const BigRational& value, unsigned exponent) {
  BigInteger shifted = value.get_num();
  shifted <<= exponent;
  BigInteger q;
  mpz_cdiv_q(q.get_mpz_t(), shifted.get_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigRational simplest_between(const BigRational& lo, const BigRational& hi) {
  if (!(lo < hi)) throw DomainError("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return 0;
  if (hi <= 0) return -simplest_between(-hi, -lo);

  // 0 <= lo < hi. Continued-fraction walk: the simplest rational in (lo, hi)
  // is floor(lo) + 1 when that lies below hi, otherwise fl + 1/simplest(1/(hi-fl), 1/(lo-fl)).
  BigInteger fl = floor(lo);
  if (BigRational(fl + 1) < hi) return BigRational(fl + 1);
  BigRational x = lo - fl;
  BigRational y = hi - fl;  // 0 <= x < y <= 1
  BigRational inner_lo = 1 / y;
  if (x == 0) {
    // (1/y, +inf): floor(1/y) + 1 is always inside.
    return fl + 1 / BigRational(floor(inner_lo) + 1);
  }
  return fl + 1 / simplest_between(inner_lo, 1 / x);
}

}  // namespace cesaro
