#include "cesaro/exactnum/ratfun.hpp"

#include <algorithm>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

// Removes from `rest_a` and `rest_b` the factors they have in common.
void cancel_common(std::vector<MultiPoly>& rest_a, std::vector<MultiPoly>& rest_b) {
  for (auto it = rest_a.begin(); it != rest_a.end();) {
    auto match = std::find(rest_b.begin(), rest_b.end(), *it);
    if (match != rest_b.end()) {
      rest_b.erase(match);
      it = rest_a.erase(it);
    } else {
      ++it;
    }
  }
}

MultiPoly product(const std::vector<MultiPoly>& factors) {
  MultiPoly p(1);
  for (const auto& f : factors) p *= f;
  return p;
}

}  // namespace

RationalFunction::RationalFunction(MultiPoly numerator) : num_(std::move(numerator)) {}

RationalFunction::RationalFunction(MultiPoly numerator, std::vector<MultiPoly> denominator_factors)
    : num_(std::move(numerator)) {
  for (const auto& f : denominator_factors) add_factor(f);
}

void RationalFunction::add_factor(const MultiPoly& factor) {
  if (factor.is_zero()) throw DomainError("rational function with zero denominator");
  BigRational lead = factor.terms().begin()->second;
  if (factor.is_constant()) {
    num_ *= MultiPoly(BigRational(1 / lead));
    return;
  }
  num_ *= MultiPoly(BigRational(1 / lead));
  den_.push_back(factor * MultiPoly(BigRational(1 / lead)));
}

MultiPoly RationalFunction::denominator() const { return product(den_); }

RationalFunction RationalFunction::substitute(Var v, const MultiPoly& replacement) const {
  std::vector<MultiPoly> factors;
  factors.reserve(den_.size());
  for (const auto& f : den_) factors.push_back(f.substitute(v, replacement));
  return RationalFunction(num_.substitute(v, replacement), std::move(factors));
}

RationalFunction RationalFunction::evaluate(Var v, const BigRational& value) const {
  std::vector<MultiPoly> factors;
  factors.reserve(den_.size());
  for (const auto& f : den_) factors.push_back(f.evaluate(v, value));
  return RationalFunction(num_.evaluate(v, value), std::move(factors));
}

BigRational RationalFunction::evaluate(const Assignment& point) const {
  BigRational den = 1;
  for (const auto& f : den_) den *= f.evaluate(point);
  if (den == 0) throw DomainError("rational function evaluated at a pole");
  return num_.evaluate(point) / den;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  std::vector<MultiPoly> only_a = a.den_;
  std::vector<MultiPoly> only_b = b.den_;
  cancel_common(only_a, only_b);
  // lcd = a.den * only_b
  std::vector<MultiPoly> lcd = a.den_;
  lcd.insert(lcd.end(), only_b.begin(), only_b.end());
  RationalFunction out;
  out.num_ = a.num_ * product(only_b) + b.num_ * product(only_a);
  out.den_ = std::move(lcd);
  return out;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.num_ = -a.num_;
  return out;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction out;
  out.num_ = a.num_ * b.num_;
  out.den_ = a.den_;
  out.den_.insert(out.den_.end(), b.den_.begin(), b.den_.end());
  return out;
}

std::string RationalFunction::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string s = "(" + num_.to_string() + ") / ";
  if (den_.size() == 1) return s + "(" + den_[0].to_string() + ")";
  s += "(";
  for (std::size_t n = 0; n < den_.size(); ++n) s += (n > 0 ? "*(" : "(") + den_[n].to_string() + ")";
  return s + ")";
}

bool ratfun_identity(const RationalFunction& f, const RationalFunction& g) {
  std::vector<MultiPoly> only_f = f.denominator_factors();
  std::vector<MultiPoly> only_g = g.denominator_factors();
  cancel_common(only_f, only_g);
  return poly_equal(f.numerator() * product(only_g), g.numerator() * product(only_f));
}

}  // namespace cesaro
