#include "cesaro/series_bracket.hpp"

#include "cesaro/errors.hpp"

namespace cesaro {

BracketAccumulator::BracketAccumulator(std::size_t exact_terms, unsigned precision_bits)
    : exact_terms_(exact_terms), bits_(precision_bits) {}

void BracketAccumulator::add(const BigRational& term) { add(term.get_num(), term.get_den()); }

void BracketAccumulator::add(const BigInteger& num, const BigInteger& den) {
  if (num < 0 || den <= 0) throw DomainError("BracketAccumulator: terms must be nonnegative");
  if (count_ < exact_terms_) {
    exact_ += rational(num, den);
  } else {
    BigInteger shifted = num;
    shifted <<= bits_;
    BigInteger q;
    BigInteger r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), shifted.get_mpz_t(), den.get_mpz_t());
    floor_sum_ += q;
    ceil_sum_ += q;
    if (r != 0) ceil_sum_ += 1;
  }
  ++count_;
}

BigRational BracketAccumulator::lower() const {
  BigInteger scale = 1;
  scale <<= bits_;
  return exact_ + rational(floor_sum_, scale);
}

BigRational BracketAccumulator::upper() const {
  BigInteger scale = 1;
  scale <<= bits_;
  return exact_ + rational(ceil_sum_, scale);
}

BigRational cesaro_tail_bound(unsigned order, const BigRational& alpha, std::size_t first) {
  BigRational u0(static_cast<unsigned long>(first));
  if (u0 + alpha <= 0) throw DomainError("cesaro_tail_bound: first + alpha must be positive");
  const long k = order;
  BigRational rho = (u0 + 2 * k) / (u0 + 1 + alpha);
  if (rho < 1) rho = 1;
  BigRational rho_power = 1;
  for (long e = 0; e < 2 * k - 2; ++e) rho_power *= rho;
  return BigRational(k * k) * rho_power / (u0 + alpha);
}

}  // namespace cesaro
