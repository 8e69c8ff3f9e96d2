#include "cesaro/exactnum/unipoly.hpp"

#include <sstream>
#include <stdexcept>

#include "cesaro/errors.hpp"

namespace cesaro {

UniPoly::UniPoly(long constant) : UniPoly(BigRational(constant)) {}

UniPoly::UniPoly(const BigRational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UniPoly::UniPoly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::x() { return UniPoly(std::vector<BigRational>{0, 1}); }

UniPoly UniPoly::from_roots(const std::vector<BigRational>& roots) {
  UniPoly p(1);
  for (const auto& r : roots) p *= UniPoly(std::vector<BigRational>{-r, 1});
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigRational UniPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigRational(0);
}

BigRational UniPoly::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int UniPoly::sign_at(const BigRational& x) const { return sgn((*this)(x)); }

int UniPoly::sign_at_infinity() const { return coeffs_.empty() ? 0 : sgn(coeffs_.back()); }

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = coeffs_[n] * static_cast<long>(n);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (coeffs_.empty()) return {};
  UniPoly out = *this;
  BigRational lead = coeffs_.back();
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

UniPoly UniPoly::shifted(const BigRational& shift) const {
  // Horner in the composed variable (x + shift).
  UniPoly linear(std::vector<BigRational>{shift, 1});
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= linear;
    acc += UniPoly(*it);
  }
  return acc;
}

std::vector<BigInteger> UniPoly::primitive_integer_coefficients() const {
  BigInteger den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInteger> ints;
  ints.reserve(coeffs_.size());
  BigInteger content = 0;
  for (const auto& c : coeffs_) {
    BigInteger v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (content == 0) return ints;
  if (!ints.empty() && ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return ints;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t n = 0; n < other.coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
  if (coeffs_.empty() || other.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * other.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly operator-(const UniPoly& a) {
  UniPoly out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string UniPoly::to_string(std::string_view variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    const BigRational& c = coeffs_[n];
    if (c == 0) continue;
    BigRational mag = cesaro::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 0 || mag != 1) {
      os << cesaro::to_string(mag);
      if (n > 0) os << "*";
    }
    if (n > 0) {
      os << variable;
      if (n > 1) os << "^" << n;
    }
  }
  return os.str();
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result(1);
  UniPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<BigRational> rem = a.coefficients();
  const auto& den = b.coefficients();
  std::size_t db = den.size() - 1;
  std::vector<BigRational> quot(rem.size() - db);
  for (std::size_t n = rem.size(); n-- > db;) {
    if (rem[n] == 0) continue;
    BigRational factor = rem[n] / den[db];
    quot[n - db] = factor;
    for (std::size_t m = 0; m <= db; ++m) rem[n - db + m] -= factor * den[m];
  }
  rem.resize(db);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_divide: nonzero remainder");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  std::vector<UniPoly> factors;
  if (p.degree() == 0) return factors;
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = exact_divide(f, a);
  // Yun: c = f'/a, d = c - b'; iterate a_i = gcd(b, d), b <- b/a_i, c <- d/a_i.
  UniPoly c = exact_divide(fp, a);
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly ai = gcd(b, d);
    factors.push_back(ai);
    b = exact_divide(b, ai);
    c = exact_divide(d, ai);
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  if (p.degree() <= 0) return UniPoly(1);
  return exact_divide(p, gcd(p, p.derivative())).monic();
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps sign variations intact and coefficients small.
    BigRational scale = cesaro::abs(r.leading());
    chain.push_back(-r * UniPoly(1 / scale));
  }
  return chain;
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int variations = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}
}  // namespace

int sign_variations_at(const std::vector<UniPoly>& chain, const BigRational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int sign_variations_at_infinity(const std::vector<UniPoly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.sign_at_infinity());
  return count_variations(signs);
}

namespace {
// Square-free with nonzero values at both endpoints.
UniPoly strip_endpoint_roots(const UniPoly& p, const BigRational& lo, const BigRational* hi) {
  UniPoly g = squarefree_part(p);
  if (g.sign_at(lo) == 0) g = exact_divide(g, UniPoly(std::vector<BigRational>{-lo, 1}));
  if (hi != nullptr && g.sign_at(*hi) == 0) g = exact_divide(g, UniPoly(std::vector<BigRational>{-*hi, 1}));
  return g;
}
}  // namespace

int count_roots_open(const UniPoly& p, const BigRational& lo, const BigRational& hi) {
  if (p.is_zero()) throw DomainError("count_roots_open: zero polynomial");
  if (!(lo < hi)) return 0;
  UniPoly g = strip_endpoint_roots(p, lo, &hi);
  if (g.degree() <= 0) return 0;
  auto chain = sturm_sequence(g);
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

int count_roots_above(const UniPoly& p, const BigRational& lo) {
  if (p.is_zero()) throw DomainError("count_roots_above: zero polynomial");
  UniPoly g = strip_endpoint_roots(p, lo, nullptr);
  if (g.degree() <= 0) return 0;
  auto chain = sturm_sequence(g);
  return sign_variations_at(chain, lo) - sign_variations_at_infinity(chain);
}

BigRational cauchy_root_bound(const UniPoly& p) {
  if (p.degree() <= 0) return 1;
  BigRational best = 0;
  const BigRational& lead = p.leading();
  for (int n = 0; n < p.degree(); ++n) {
    BigRational ratio = cesaro::abs(p.coefficient(static_cast<std::size_t>(n)) / lead);
    if (ratio > best) best = ratio;
  }
  return best + 1;
}

}  // namespace cesaro
