#include "cesaro/exactnum/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "cesaro/errors.hpp"

namespace cesaro {

const char* var_name(Var v) {
  switch (v) {
    case Var::alpha: return "alpha";
    case Var::i: return "i";
    case Var::j: return "j";
    case Var::t: return "t";
  }
  return "?";
}

const BigRational& Assignment::operator[](Var v) const {
  switch (v) {
    case Var::alpha: return alpha;
    case Var::i: return i;
    case Var::j: return j;
    case Var::t: return t;
  }
  return alpha;
}

MultiPoly::MultiPoly(long constant) : MultiPoly(BigRational(constant)) {}

MultiPoly::MultiPoly(const BigRational& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(1, e);
}

MultiPoly MultiPoly::monomial(const BigRational& coefficient, const Exponents& exponents) {
  MultiPoly p;
  p.add_term(exponents, coefficient);
  return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, Var v) {
  MultiPoly out;
  const auto& c = p.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(n);
    out.add_term(e, c[n]);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

BigRational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? BigRational(0) : it->second;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  auto idx = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[idx]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::coefficient(Var v, unsigned power) const {
  MultiPoly out;
  auto idx = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != power) continue;
    Exponents reduced = e;
    reduced[idx] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

std::vector<MultiPoly> MultiPoly::coefficients(Var v) const {
  std::vector<MultiPoly> out(degree(v) + 1);
  auto idx = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    Exponents reduced = e;
    reduced[idx] = 0;
    out[e[idx]].add_term(reduced, c);
  }
  return out;
}

MultiPoly MultiPoly::evaluate(Var v, const BigRational& value) const {
  auto idx = static_cast<std::size_t>(v);
  std::vector<BigRational> powers{1};
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[idx]) powers.push_back(powers.back() * value);
    Exponents reduced = e;
    reduced[idx] = 0;
    out.add_term(reduced, c * powers[e[idx]]);
  }
  return out;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& replacement) const {
  auto coeffs = coefficients(v);
  MultiPoly acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= replacement;
    acc += *it;
  }
  return acc;
}

BigRational MultiPoly::evaluate(const Assignment& point) const {
  std::array<std::vector<BigRational>, kVarCount> powers;
  for (std::size_t v = 0; v < kVarCount; ++v) powers[v].push_back(1);
  BigRational total = 0;
  for (const auto& [e, c] : terms_) {
    BigRational term = c;
    for (std::size_t v = 0; v < kVarCount; ++v) {
      auto& pw = powers[v];
      while (pw.size() <= e[v]) pw.push_back(pw.back() * point[static_cast<Var>(v)]);
      if (e[v] > 0) term *= pw[e[v]];
    }
    total += term;
  }
  return total;
}

UniPoly MultiPoly::to_unipoly(Var v) const {
  auto idx = static_cast<std::size_t>(v);
  std::vector<BigRational> c(degree(v) + 1);
  for (const auto& [e, coeff] : terms_) {
    for (std::size_t w = 0; w < kVarCount; ++w) {
      if (w != idx && e[w] != 0) {
        throw DomainError(std::string("to_unipoly: polynomial depends on a variable other than ") + var_name(v));
      }
    }
    c[e[idx]] = coeff;
  }
  return UniPoly(std::move(c));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e;
      for (std::size_t v = 0; v < kVarCount; ++v) e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigRational mag = cesaro::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](auto x) { return x > 0; });
    bool wrote = false;
    if (!has_var || mag != 1) {
      os << cesaro::to_string(mag);
      wrote = true;
    }
    for (std::size_t v = 0; v < kVarCount; ++v) {
      if (e[v] == 0) continue;
      if (wrote) os << "*";
      os << var_name(static_cast<Var>(v));
      if (e[v] > 1) os << "^" << e[v];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result(1);
  MultiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

bool poly_equal(const MultiPoly& p, const MultiPoly& q) { return (p - q).is_zero(); }

}  // namespace cesaro
