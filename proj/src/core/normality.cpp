#include "cesaro/normality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cesaro/errors.hpp"
#include "cesaro/exactnum/multipoly.hpp"
#include "cesaro/telescope.hpp"

namespace cesaro {

const char* to_string(PsdVerdict v) {
  switch (v) {
    case PsdVerdict::positive_definite: return "positive-definite";
    case PsdVerdict::positive_semidefinite: return "positive-semidefinite";
    case PsdVerdict::indefinite: return "indefinite";
  }
  return "?";
}

namespace {

bool is_leading_set(const std::vector<std::size_t>& s) {
  for (std::size_t n = 0; n < s.size(); ++n)
    if (s[n] != n) return false;
  return true;
}

}  // namespace

PsdCertificate psd_certificate(const RationalMatrix& m) {
  if (m.rows() != m.cols() || !m.is_symmetric()) throw DomainError("psd_certificate: matrix must be square and symmetric");
  PsdCertificate cert;
  cert.dimension = m.rows();
  bool leading_positive = true;
  bool all_nonnegative = true;
  for (auto& s : principal_index_sets(m.rows())) {
    BigRational d = determinant(m.principal_submatrix(s));
    if (is_leading_set(s) && d <= 0) leading_positive = false;
    if (d < 0) all_nonnegative = false;
    cert.minors.push_back({std::move(s), std::move(d)});
  }
  cert.verdict = leading_positive ? PsdVerdict::positive_definite
                                  : (all_nonnegative ? PsdVerdict::positive_semidefinite : PsdVerdict::indefinite);
  return cert;
}

bool SymbolicMinor::leading() const { return is_leading_set(indices); }

SymbolicMinorSet minors_of(const SymbolicCorner& corner, bool shifted) {
  SymbolicMinorSet out;
  out.order = corner.order;
  out.corner_size = corner.size;
  out.shifted = shifted;
  const std::size_t c = corner.size;

  UniPoly lcm(1);
  for (const auto& row : corner.entries)
    for (const auto& e : row) lcm = exact_divide(lcm * e.den, gcd(lcm, e.den)).monic();
  out.denominator = lcm;

  UniPolyMatrix cleared(c, std::vector<UniPoly>(c));
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < c; ++b) {
      const auto& e = corner.entries[a][b];
      cleared[a][b] = e.num * exact_divide(lcm, e.den);
      if (shifted && a == b) cleared[a][b] -= lcm;
    }
  }

  for (auto& s : principal_index_sets(c)) {
    UniPolyMatrix block(s.size(), std::vector<UniPoly>(s.size()));
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) block[a][b] = cleared[s[a]][s[b]];
    UniPoly det = polynomial_determinant(std::move(block));
    SymbolicMinor minor;
    minor.value = reduce(det, pow(lcm, static_cast<unsigned>(s.size())));
    minor.sign_poly = s.size() % 2 == 1 ? det * lcm : det;
    minor.indices = std::move(s);
    out.minors.push_back(std::move(minor));
  }
  return out;
}

SymbolicMinorSet q_minors_symbolic(unsigned order) {
  require_order(order);
  return minors_of(symbolic_corner(order, order), false);
}

SymbolicMinorSet q_shifted_minors_symbolic(unsigned order) {
  require_order(order);
  return minors_of(symbolic_corner(order, order), true);
}

namespace {

UniPoly lin(long constant) { return UniPoly(std::vector<BigRational>{BigRational(constant), 1}); }

const UniRational& leading_minor(const SymbolicMinorSet& set, std::size_t size) {
  for (const auto& m : set.minors)
    if (m.indices.size() == size && m.leading()) return m.value;
  throw std::logic_error("leading minor not found");
}

bool equals_scaled(const UniRational& value, const UniPoly& expected, long scale) {
  return value.is_polynomial() && value.num * UniPoly(scale) == expected * value.den;
}

}  // namespace

bool q_minors_regression() {
  auto set = minors_of(fixture_symbolic_corner_order3(), false);
  UniPoly a = UniPoly::x();
  UniPoly det2 = lin(1) * pow(lin(2), 2) * pow(lin(3), 2) * lin(4) *
                 UniPoly(std::vector<BigRational>{20, 15, 3});
  UniPoly det3 = lin(1) * pow(lin(2), 2) * pow(lin(3), 3) * pow(lin(4), 2) * lin(5);
  return equals_scaled(leading_minor(set, 2), det2, 2880) && equals_scaled(leading_minor(set, 3), det3, 8640);
}

bool shifted_minors_regression() {
  auto set = minors_of(fixture_symbolic_corner_order3(), true);
  UniPoly a = UniPoly::x();
  UniPoly det2 = lin(-1) * a * a * lin(1) * UniPoly(std::vector<BigRational>{2308, 1860, 521, 60, 3});
  UniPoly det3 = lin(-2) * pow(lin(-1), 2) * pow(a, 3) * pow(lin(1), 2) * lin(2);
  return equals_scaled(leading_minor(set, 2), det2, 2880) && equals_scaled(leading_minor(set, 3), det3, 8640);
}

std::string RangeComponent::to_string() const {
  if (point) return "{" + cesaro::to_string(left) + "}";
  std::string right_text = std::holds_alternative<PlusInfinity>(right) ? "inf" : cesaro::to_string(right);
  return std::string(left_closed ? "[" : "(") + cesaro::to_string(left) + ", " + right_text +
         (right_closed ? "]" : ")");
}

namespace {

// -1, 0, +1 as x is below, at or above the point.
int compare(const BigRational& x, const RealPoint& point) {
  if (const auto* r = std::get_if<BigRational>(&point)) return x < *r ? -1 : (x > *r ? 1 : 0);
  if (std::holds_alternative<PlusInfinity>(point)) return -1;
  IsolatedRoot root = std::get<IsolatedRoot>(point);
  if (root.lo < x && x < root.hi && root.poly.sign_at(x) == 0) return 0;
  while (root.lo < x && x < root.hi) root.refine();
  return x <= root.lo ? -1 : 1;
}

bool satisfies(Sign s, SignCondition condition) {
  return condition == SignCondition::positive ? s == Sign::positive : s != Sign::negative;
}

}  // namespace

bool AlphaRangeReport::contains(const BigRational& alpha) const {
  if (!domain.contains(alpha)) {
    return extends_to_infinity && domain.hi && alpha > *domain.hi;
  }
  for (const auto& c : components) {
    int l = compare(alpha, c.left);
    int r = compare(alpha, c.right);
    if (c.point) {
      if (l == 0) return true;
      continue;
    }
    bool after_left = l > 0 || (l == 0 && c.left_closed);
    bool before_right = r < 0 || (r == 0 && c.right_closed);
    if (after_left && before_right) return true;
  }
  return false;
}

std::string AlphaRangeReport::to_string() const {
  if (components.empty()) return "empty";
  std::string out;
  for (std::size_t n = 0; n < components.size(); ++n) {
    if (n > 0) out += " U ";
    const auto& c = components[n];
    if (n + 1 == components.size() && extends_to_infinity) {
      out += std::string(c.left_closed ? "[" : "(") + cesaro::to_string(c.left) + ", inf)";
    } else {
      out += c.to_string();
    }
  }
  return out;
}

AlphaRangeReport range_where(const std::vector<UniPoly>& polys, SignCondition condition, const Domain& domain,
                             const UniPoly& undefined_at) {
  AlphaRangeReport report;
  report.domain = domain;
  if (domain.empty()) return report;

  std::vector<UniPoly> boundary = polys;
  boundary.push_back(undefined_at);
  auto pieces = partition_domain(merged_roots(boundary, domain), domain);

  bool last_held = false;
  std::optional<RangeComponent> current;
  for (const auto& piece : pieces) {
    bool holds = sign_on_piece(undefined_at, piece) != Sign::zero;
    for (const auto& p : polys) {
      if (!holds) break;
      holds = satisfies(sign_on_piece(p, piece), condition);
    }
    last_held = holds;
    if (!holds) {
      if (current) report.components.push_back(std::move(*current));
      current.reset();
      continue;
    }
    if (!current) {
      current = RangeComponent{piece.left, piece.left_closed, piece.right, piece.right_closed, piece.point};
    } else {
      current->right = piece.right;
      current->right_closed = piece.right_closed;
      current->point = false;
    }
  }
  if (current) report.components.push_back(std::move(*current));

  if (!last_held) return report;
  if (!domain.hi) {
    report.extends_to_infinity = true;
    return report;
  }
  bool beyond = undefined_at.sign_at_infinity() != 0 && count_roots_above(undefined_at, *domain.hi) == 0;
  for (const auto& p : polys) {
    if (!beyond) break;
    if (p.is_zero()) {
      beyond = condition == SignCondition::nonnegative;
      continue;
    }
    beyond = count_roots_above(p, *domain.hi) == 0 && satisfies(to_sign(p.sign_at_infinity()), condition);
  }
  report.extends_to_infinity = beyond;
  return report;
}

bool p_dominance_certificate(unsigned order) {
  require_order(order);
  const MultiPoly n = MultiPoly::variable(Var::i);
  const MultiPoly a = MultiPoly::variable(Var::alpha);
  for (unsigned m = 1; m <= order; ++m) {
    MultiPoly num = n + a + MultiPoly(static_cast<long>(m));
    MultiPoly den = n + a + MultiPoly(static_cast<long>(order + m));
    // num = n + (alpha + 1) + (m - 1) with n >= 0 and alpha + 1 > 0.
    MultiPoly slack = num - n - a - MultiPoly(1);
    if (!slack.is_constant() || slack.constant_term() < 0) return false;
    MultiPoly gap = den - num;
    if (!gap.is_constant() || gap.constant_term() <= 0) return false;
  }
  return true;
}

AlphaRangeReport posinormal_coposinormal_range(unsigned order, const Domain& domain) {
  if (!p_dominance_certificate(order)) throw std::logic_error("diagonal interrupter is not positive");
  auto set = q_minors_symbolic(order);
  std::vector<UniPoly> polys;
  for (const auto& m : set.minors)
    if (m.leading()) polys.push_back(m.sign_poly);
  auto report = range_where(polys, SignCondition::positive, domain, set.denominator);
  report.condition = "corner(Q) positive definite";
  report.order = order;
  return report;
}

AlphaRangeReport hyponormality_range(unsigned order, const Domain& domain) {
  if (!p_dominance_certificate(order)) throw std::logic_error("P <= I fails");
  auto set = q_shifted_minors_symbolic(order);
  std::vector<UniPoly> polys;
  for (const auto& m : set.minors) polys.push_back(m.sign_poly);
  auto report = range_where(polys, SignCondition::nonnegative, domain, set.denominator);
  report.condition = "Q - I positive semidefinite (sufficient condition)";
  report.order = order;
  return report;
}

CornerChoice parse_corner_choice(const std::string& text) {
  if (text == "auto") return CornerChoice::automatic;
  if (text == "fixture") return CornerChoice::fixture;
  if (text == "solved") return CornerChoice::solved;
  if (text == "identity") return CornerChoice::identity;
  throw DomainError("unknown corner choice: " + text);
}

const char* to_string(CornerChoice c) {
  switch (c) {
    case CornerChoice::automatic: return "auto";
    case CornerChoice::fixture: return "fixture";
    case CornerChoice::solved: return "solved";
    case CornerChoice::identity: return "identity";
  }
  return "?";
}

IdentityReport verify_supraposinormal(unsigned order, const BigRational& alpha, std::size_t n_check,
                                      CornerChoice choice, unsigned jobs) {
  require_order(order);
  require_alpha(alpha);
  CesaroMatrix m(order, alpha);
  DiagonalInterrupter p(order, alpha);
  auto form = cached_telescope(order);
  auto rhs = telescoped_closed_form(order, alpha);

  auto run = [&](CornerInterrupter q, CornerProvenance provenance) {
    auto report = verify_consistency(m, InterrupterPair{std::move(q), p}, n_check, rhs, jobs);
    report.provenance = provenance;
    report.telescope_escalations = form->escalations;
    return report;
  };

  if (choice == CornerChoice::automatic) choice = order == 3 ? CornerChoice::fixture : CornerChoice::solved;
  switch (choice) {
    case CornerChoice::fixture:
      if (order != 3) throw DomainError("the fixed corner exists only for order 3");
      return run(fixture_q_order3(alpha), CornerProvenance::fixture);
    case CornerChoice::identity:
      return run(CornerInterrupter::identity(order), CornerProvenance::identity);
    default:
      break;
  }
  auto report = run(solve_corner(order, alpha, order, rhs), CornerProvenance::solved);
  if (report.verified()) return report;
  auto wider = run(solve_corner(order, alpha, order + 1, rhs), CornerProvenance::solved);
  wider.corner_escalated = true;
  return wider;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) off += at(r, c) * at(r, c);
    if (off < 1e-300) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0) continue;
        double theta = (at(q, q) - at(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = at(k, p);
          double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = at(p, k);
          double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t r = 0; r < n; ++r) eig[r] = at(r, r);
  std::sort(eig.begin(), eig.end());
  return eig;
}

DefectReport finite_section_defect(unsigned order, const BigRational& alpha, std::size_t section,
                                   std::size_t tail_terms, unsigned jobs) {
  require_order(order);
  require_alpha(alpha);
  if (section < 1) throw DomainError("section size must be >= 1");
  if (tail_terms < 1) throw DomainError("tail term count must be >= 1");
  const std::size_t n = section;
  const BigInteger p = alpha.get_num();
  const BigInteger q = alpha.get_den();
  BigInteger q_power = 1;
  for (unsigned m = 0; m < order; ++m) q_power *= q;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<SumBracket> brackets(pairs.size());

  // m_{ui} = k q^k prod_{m<k} (u-i+m) / prod_{m<=k} (q(u+m)+p).
  auto worker = [&](std::size_t first, std::size_t stride) {
    std::vector<BracketAccumulator> acc(pairs.size());
    const std::size_t last_u = n - 1 + tail_terms;
    std::vector<BigInteger> num(n);
    BigInteger den;
    BigInteger den2;
    BigInteger term;
    for (std::size_t u = 0; u < last_u; ++u) {
      den = 1;
      for (unsigned m = 1; m <= order; ++m) den *= q * static_cast<unsigned long>(u + m) + p;
      den2 = den * den;
      for (std::size_t i = 0; i < n && i <= u; ++i) {
        num[i] = q_power * static_cast<unsigned long>(order);
        for (unsigned m = 1; m < order; ++m) num[i] *= static_cast<unsigned long>(u - i + m);
      }
      for (std::size_t x = first; x < pairs.size(); x += stride) {
        auto [i, j] = pairs[x];
        if (u < j || u >= j + tail_terms) continue;
        term = num[i] * num[j];
        acc[x].add(term, den2);
      }
    }
    for (std::size_t x = first; x < pairs.size(); x += stride) {
      brackets[x] = acc[x].bracket(cesaro_tail_bound(order, alpha, pairs[x].second + tail_terms));
    }
  };
  unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(pairs.size())));
  if (workers == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w, workers);
    for (auto& th : pool) th.join();
  }

  CesaroMatrix m(order, alpha);
  DefectReport report;
  report.order = order;
  report.alpha = alpha;
  report.section = n;
  report.tail_terms = tail_terms;
  report.midpoint.assign(n * n, 0.0);
  report.max_bracket_width = 0;
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    auto [i, j] = pairs[x];
    BigRational aa = 0;
    for (std::size_t u = 0; u <= i; ++u) aa += m.entry(i, u) * m.entry(j, u);
    double mid = to_double(brackets[x].midpoint() - aa);
    report.midpoint[i * n + j] = mid;
    report.midpoint[j * n + i] = mid;
    if (brackets[x].width() > report.max_bracket_width) report.max_bracket_width = brackets[x].width();
  }
  report.min_eigenvalue = jacobi_eigenvalues(report.midpoint, n).front();

  CornerInterrupter corner = order == 3 ? fixture_q_order3(alpha) : solve_corner(order, alpha, order);
  RationalMatrix shifted = corner.corner() - RationalMatrix::identity(corner.corner_size());
  report.sufficient_condition_holds = psd_certificate(shifted).positive_semidefinite();
  report.label = report.sufficient_condition_holds ? "sufficient condition holds (Q - I >= 0)"
                                                   : "inconclusive (sufficient condition only)";
  return report;
}

}  // namespace cesaro
