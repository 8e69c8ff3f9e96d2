#include "cesaro/telescope.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "cesaro/cesaro_matrix.hpp"
#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

const MultiPoly& sym(Var v) {
  static const MultiPoly vars[] = {MultiPoly::variable(Var::alpha), MultiPoly::variable(Var::i),
                                   MultiPoly::variable(Var::j), MultiPoly::variable(Var::t)};
  return vars[static_cast<std::size_t>(v)];
}

// j + t + m + alpha
MultiPoly shifted_factor(long m) { return sym(Var::j) + sym(Var::t) + MultiPoly(m) + sym(Var::alpha); }

MultiPoly summand_numerator(unsigned order) {
  MultiPoly num(static_cast<long>(order) * static_cast<long>(order));
  for (unsigned m = 1; m < order; ++m) {
    num *= sym(Var::j) - sym(Var::i) + MultiPoly(static_cast<long>(m)) + sym(Var::t);
    num *= sym(Var::t) + MultiPoly(static_cast<long>(m));
  }
  return num;
}

std::string shape(unsigned degree, unsigned length) {
  return "numerator degree " + std::to_string(degree) + " over " + std::to_string(length) + " factors";
}

}  // namespace

SeriesSummand summand(unsigned order) {
  require_order(order);
  std::vector<MultiPoly> den;
  for (unsigned m = 1; m <= 2 * order; ++m) den.push_back(shifted_factor(m));
  return {order, RationalFunction(summand_numerator(order), std::move(den))};
}

SeriesSummand summand(unsigned order, std::size_t i, std::size_t j) {
  if (i > j) throw DomainError("summand requires i <= j (swap the indices)");
  SeriesSummand s = summand(order);
  s.value = s.value.evaluate(Var::i, BigRational(static_cast<unsigned long>(i)))
                .evaluate(Var::j, BigRational(static_cast<unsigned long>(j)));
  return s;
}

MultiPoly TelescopeForm::numerator() const {
  MultiPoly num;
  MultiPoly t_power(1);
  for (const auto& c : coefficients) {
    num += c * t_power;
    t_power *= sym(Var::t);
  }
  return num;
}

RationalFunction TelescopeForm::as_ratfun() const { return RationalFunction(numerator(), denominator_factors); }

BigRational TelescopeForm::at_zero(const BigRational& alpha, std::size_t i, std::size_t j) const {
  Assignment at;
  at.alpha = alpha;
  at.i = static_cast<unsigned long>(i);
  at.j = static_cast<unsigned long>(j);
  at.t = 0;
  BigRational den = 1;
  for (std::size_t m = 1; m <= denominator_factors.size(); ++m) {
    den *= at.j + static_cast<unsigned long>(m) + alpha;
  }
  return coefficients.front().evaluate(at) / den;
}

TelescopeForm solve_telescope(unsigned order, unsigned numerator_degree, unsigned denominator_length) {
  require_order(order);
  const unsigned k = order;
  const unsigned d = numerator_degree;
  const unsigned len = denominator_length;
  if (len + 1 < 2 * k) {
    throw AnsatzFailure(k, d, "telescope ansatz: " + shape(d, len) + " cannot reach the summand's denominator");
  }
  if (d >= len) {
    throw AnsatzFailure(k, d, "telescope ansatz: " + shape(d, len) + " does not vanish as t -> inf");
  }

  // N(t)(t+j+L+1+alpha) - N(t+1)(t+j+1+alpha) = R(t) * prod_{m=2k+1}^{L+1} (t+j+m+alpha)
  MultiPoly rhs = summand_numerator(k);
  for (unsigned m = 2 * k + 1; m <= len + 1; ++m) rhs *= shifted_factor(m);
  auto rhs_coeffs = rhs.coefficients(Var::t);

  const MultiPoly& t = sym(Var::t);
  MultiPoly upper = shifted_factor(len + 1);
  MultiPoly lower = shifted_factor(1);
  // images[m] = coefficients in t of the operator applied to t^m
  std::vector<std::vector<MultiPoly>> images;
  for (unsigned m = 0; m <= d; ++m) {
    MultiPoly basis = pow(t, m);
    MultiPoly shifted_basis = pow(t + MultiPoly(1), m);
    images.push_back((basis * upper - shifted_basis * lower).coefficients(Var::t));
  }
  auto image_coeff = [&](unsigned n, unsigned m) -> MultiPoly {
    return n < images[m].size() ? images[m][n] : MultiPoly();
  };

  for (std::size_t n = d + 1; n < rhs_coeffs.size(); ++n) {
    if (!rhs_coeffs[n].is_zero()) {
      throw AnsatzFailure(k, d, "telescope ansatz: " + shape(d, len) + " leaves t^" + std::to_string(n) + " unmatched");
    }
  }

  std::vector<MultiPoly> c(d + 1);
  for (unsigned n = d + 1; n-- > 0;) {
    MultiPoly residual = n < rhs_coeffs.size() ? rhs_coeffs[n] : MultiPoly();
    for (unsigned m = n + 1; m <= d; ++m) residual -= image_coeff(n, m) * c[m];
    MultiPoly pivot = image_coeff(n, n);
    if (!pivot.is_constant() || pivot.is_zero()) {
      throw AnsatzFailure(k, d, "telescope ansatz: non-constant or zero pivot at t^" + std::to_string(n));
    }
    c[n] = residual * MultiPoly(BigRational(1 / pivot.constant_term()));
  }

  TelescopeForm form;
  form.order = k;
  form.coefficients = std::move(c);
  for (unsigned m = 1; m <= len; ++m) form.denominator_factors.push_back(shifted_factor(m));
  if (!telescoping_identity_holds(form)) {
    throw AnsatzFailure(k, d, "telescope ansatz: solution failed the identity check");
  }
  return form;
}

TelescopeForm solve_telescope(unsigned order) {
  require_order(order);
  try {
    return solve_telescope(order, 2 * order - 2, 2 * order - 1);
  } catch (const AnsatzFailure&) {
    TelescopeForm form = solve_telescope(order, 2 * order - 1, 2 * order);
    form.escalations = 1;
    return form;
  }
}

std::shared_ptr<const TelescopeForm> cached_telescope(unsigned order) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const TelescopeForm>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  auto form = std::make_shared<const TelescopeForm>(solve_telescope(order));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(order, std::move(form)).first->second;
}

bool telescoping_identity_holds(const TelescopeForm& form) {
  RationalFunction s = form.as_ratfun();
  RationalFunction next = s.substitute(Var::t, sym(Var::t) + MultiPoly(1));
  return ratfun_identity(s - next, summand(form.order).value);
}

BigRational closed_form_entry(unsigned order, const BigRational& alpha, std::size_t i, std::size_t j) {
  require_order(order);
  require_alpha(alpha);
  return cached_telescope(order)->at_zero(alpha, std::min(i, j), std::max(i, j));
}

SumBracket partial_sum_bracket(unsigned order, const BigRational& alpha, std::size_t i, std::size_t j,
                               std::size_t terms) {
  require_order(order);
  require_alpha(alpha);
  if (terms < 1) throw DomainError("partial_sum_bracket needs at least one term");
  const std::size_t lo = std::min(i, j);
  const std::size_t hi = std::max(i, j);
  const BigInteger p = alpha.get_num();
  const BigInteger q = alpha.get_den();
  const unsigned long k = order;

  BigInteger q_power = 1;
  for (unsigned long e = 0; e < 2 * k; ++e) q_power *= q;
  const BigInteger scale = BigInteger(k * k) * q_power;

  BracketAccumulator acc;
  for (std::size_t t = 0; t < terms; ++t) {
    BigInteger num = scale;
    for (unsigned long m = 1; m < k; ++m) {
      num *= static_cast<unsigned long>(hi - lo + m + t);
      num *= static_cast<unsigned long>(t + m);
    }
    BigInteger den = 1;
    for (unsigned long m = 1; m <= 2 * k; ++m) den *= q * static_cast<unsigned long>(hi + t + m) + p;
    acc.add(num, den);
  }
  return acc.bracket(cesaro_tail_bound(order, alpha, hi + terms));
}

namespace {

// c * alpha^a i^b j^c
MultiPoly term(const BigRational& c, unsigned a, unsigned b, unsigned d) {
  return MultiPoly::monomial(c, {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                                 static_cast<std::uint16_t>(d), 0});
}

MultiPoly sum_terms(std::initializer_list<std::array<long, 4>> terms) {
  MultiPoly out;
  for (const auto& t : terms)
    out += term(BigRational(t[0]), static_cast<unsigned>(t[1]), static_cast<unsigned>(t[2]),
                static_cast<unsigned>(t[3]));
  return out;
}

// 20 + 24a + 6a^2 - 6i - 3ai + i^2 + 30j + 15aj - 5ij + 10j^2
MultiPoly closed_form_core() {
  return sum_terms({{20, 0, 0, 0}, {24, 1, 0, 0}, {6, 2, 0, 0}, {-6, 0, 1, 0}, {-3, 1, 1, 0}, {1, 0, 2, 0},
                    {30, 0, 0, 1}, {15, 1, 0, 1}, {-5, 0, 1, 1}, {10, 0, 0, 2}});
}

MultiPoly alpha_plus_j(long m) { return sym(Var::alpha) + sym(Var::j) + MultiPoly(m); }

}  // namespace

std::vector<MultiPoly> order3_reference_coefficients() {
  MultiPoly a(9);
  MultiPoly b = MultiPoly(9) * sum_terms({{8, 0, 0, 0}, {2, 1, 0, 0}, {-1, 0, 1, 0}, {3, 0, 0, 1}});
  MultiPoly c = MultiPoly(3) * sum_terms({{71, 0, 0, 0}, {-15, 0, 1, 0}, {1, 0, 2, 0}, {57, 0, 0, 1}, {-5, 0, 1, 1},
                                          {10, 0, 0, 2}, {42, 1, 0, 0}, {6, 2, 0, 0}, {-3, 1, 1, 0}, {15, 1, 0, 1}});
  MultiPoly d = MultiPoly(rational(3, 2)) *
                sum_terms({{180, 0, 0, 0}, {-48, 0, 1, 0}, {6, 0, 2, 0}, {236, 0, 0, 1}, {-36, 0, 1, 1},
                           {1, 0, 2, 1}, {90, 0, 0, 2}, {-5, 0, 1, 2}, {10, 0, 0, 3}, {188, 1, 0, 0},
                           {60, 2, 0, 0}, {6, 3, 0, 0}, {-24, 1, 1, 0}, {-3, 2, 1, 0}, {1, 1, 2, 0},
                           {144, 1, 0, 1}, {21, 2, 0, 1}, {-8, 1, 1, 1}, {25, 1, 0, 2}});
  MultiPoly e = MultiPoly(rational(3, 10)) * alpha_plus_j(4) * alpha_plus_j(5) * closed_form_core();
  return {e, d, c, b, a};
}

RationalFunction order3_reference_closed_form() {
  return RationalFunction(MultiPoly(3) * closed_form_core(),
                          {MultiPoly(10), alpha_plus_j(1), alpha_plus_j(2), alpha_plus_j(3)});
}

bool Order3Regression::ok() const {
  if (!closed_form || coefficients.empty()) return false;
  for (bool b : coefficients)
    if (!b) return false;
  return true;
}

Order3Regression order3_regression(const TelescopeForm& form) {
  Order3Regression out;
  auto reference = order3_reference_coefficients();
  const std::size_t n = std::max(reference.size(), form.coefficients.size());
  for (std::size_t p = 0; p < n; ++p) {
    MultiPoly solved = p < form.coefficients.size() ? form.coefficients[p] : MultiPoly();
    MultiPoly known = p < reference.size() ? reference[p] : MultiPoly();
    out.coefficients.push_back(form.denominator_factors.size() == 5 && poly_equal(solved, known));
  }
  out.closed_form = ratfun_identity(form.as_ratfun().evaluate(Var::t, 0), order3_reference_closed_form());
  return out;
}

}  // namespace cesaro
