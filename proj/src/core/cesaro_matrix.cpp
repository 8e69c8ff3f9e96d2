#include "cesaro/cesaro_matrix.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <string>

#include "cesaro/errors.hpp"

namespace cesaro {

void require_order(unsigned order) {
  if (order < 1) throw DomainError("order must be a positive integer");
}

void require_alpha(const BigRational& alpha) {
  if (alpha <= -1) throw DomainError("alpha must exceed -1 (got " + to_string(alpha) + ")");
}

BigRational entry(unsigned order, const BigRational& alpha, std::size_t i, std::size_t j) {
  require_order(order);
  require_alpha(alpha);
  if (j > i) return 0;
  BigRational num = order;
  for (unsigned m = 1; m < order; ++m) num *= static_cast<unsigned long>(i - j + m);
  BigRational den = 1;
  for (unsigned m = 1; m <= order; ++m) den *= BigRational(static_cast<unsigned long>(i + m)) + alpha;
  return num / den;
}

double entry_general_beta(double alpha, double beta, std::size_t i, std::size_t j) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) throw DomainError("alpha must exceed -1");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive");
  if (j > i) return 0.0;
  auto n = static_cast<double>(i - j);
  auto x = static_cast<double>(i) + alpha + 1.0;
  // Gamma(n+beta)/Gamma(n+1) and Gamma(x)/Gamma(x+beta) as direct ratios; the
  // log-gamma difference loses ~log(i) digits to cancellation for large i.
  double lower = boost::math::tgamma_delta_ratio(n + beta, 1.0 - beta);
  double upper = boost::math::tgamma_delta_ratio(x, beta);
  return beta * lower * upper;
}

CesaroMatrix::CesaroMatrix(unsigned order, BigRational alpha)
    : order_(order), alpha_(std::move(alpha)), memo_(std::make_shared<Memo>()) {
  require_order(order_);
  require_alpha(alpha_);
}

std::vector<BigRational> CesaroMatrix::compute_row(std::size_t i) const {
  BigRational den = 1;
  for (unsigned m = 1; m <= order_; ++m) den *= BigRational(static_cast<unsigned long>(i + m)) + alpha_;
  BigRational scale = order_ / den;
  std::vector<BigRational> row(i + 1);
  for (std::size_t j = 0; j <= i; ++j) {
    BigInteger num = 1;
    for (unsigned m = 1; m < order_; ++m) num *= static_cast<unsigned long>(i - j + m);
    row[j] = scale * num;
  }
  return row;
}

const std::vector<BigRational>& CesaroMatrix::row(std::size_t i) const {
  std::lock_guard<std::mutex> lock(memo_->mutex);
  auto& rows = memo_->rows;
  while (rows.size() <= i) rows.push_back(compute_row(rows.size()));
  return rows[i];
}

BigRational CesaroMatrix::entry(std::size_t i, std::size_t j) const {
  if (j > i) return 0;
  return row(i)[j];
}

TruncatedMatrix truncate(const CesaroMatrix& m, std::size_t n) {
  if (n < 1) throw DomainError("truncation size must be >= 1");
  RationalMatrix values(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = m.row(i);
    for (std::size_t j = 0; j <= i; ++j) values(i, j) = r[j];
  }
  return TruncatedMatrix(std::move(values));
}

BigRational mqm_star_entry(const CesaroMatrix& m, const CornerInterrupter& q, std::size_t i, std::size_t j) {
  const std::size_t c = q.corner_size();
  const auto& ri = m.row(i);
  const auto& rj = m.row(j);
  BigRational total = 0;
  std::size_t ai_end = std::min(c, i + 1);
  std::size_t bj_end = std::min(c, j + 1);
  for (std::size_t a = 0; a < ai_end; ++a) {
    BigRational inner = 0;
    for (std::size_t b = 0; b < bj_end; ++b) inner += q.corner()(a, b) * rj[b];
    total += ri[a] * inner;
  }
  std::size_t top = std::min(i, j);
  for (std::size_t u = c; u <= top; ++u) total += ri[u] * rj[u];
  return total;
}

BigRational qm_star_entry(const CornerInterrupter& q, const CesaroMatrix& m, std::size_t i, std::size_t j) {
  const std::size_t c = q.corner_size();
  if (i >= c) return m.entry(j, i);
  BigRational total = 0;
  const auto& rj = m.row(j);
  for (std::size_t a = 0; a < c && a <= j; ++a) total += q.corner()(i, a) * rj[a];
  return total;
}

}  // namespace cesaro
