#include "cesaro/exactnum/roots.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cesaro/errors.hpp"

namespace cesaro {

namespace {

const BigRational kMaxIsolatingWidth = rational(1, 1024);

UniPoly linear_factor(const BigRational& root) { return UniPoly(std::vector<BigRational>{-root, 1}); }

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

bool is_infinity_token(const std::string& s) {
  return s == "inf" || s == "+inf" || s == "infinity" || s == "+infinity" || s == "oo" || s == "+oo";
}

// A split point strictly inside (a, b) that is not a root of g.
BigRational split_point(const UniPoly& g, const BigRational& a, const BigRational& b) {
  for (long den = 2;; ++den) {
    for (long num = 1; num < den; ++num) {
      BigRational m = a + (b - a) * rational(num, den);
      if (g.sign_at(m) != 0) return m;
    }
  }
}

struct Bracket {
  BigRational lo;
  BigRational hi;
};

// g square-free, nonzero at a and b; appends brackets holding exactly one root.
void bisect(const UniPoly& g, const std::vector<UniPoly>& chain, const BigRational& a, int va, const BigRational& b,
            int vb, std::vector<Bracket>& out) {
  int count = va - vb;
  if (count <= 0) return;
  if (count == 1) {
    out.push_back({a, b});
    return;
  }
  BigRational m = split_point(g, a, b);
  int vm = sign_variations_at(chain, m);
  bisect(g, chain, a, va, m, vm, out);
  bisect(g, chain, m, vm, b, vb, out);
}

// Sign-change bisection on a bracket with exactly one simple root.
void halve(const UniPoly& g, Bracket& br) {
  BigRational m = (br.lo + br.hi) / 2;
  int sm = g.sign_at(m);
  if (sm == 0) {
    br.lo = m;
    br.hi = m;
    return;
  }
  if (g.sign_at(br.lo) == sm) {
    br.lo = m;
  } else {
    br.hi = m;
  }
}

// Decides whether the single root in `br` is rational. A rational root p/q
// of the primitive integer form has q | lead, and two distinct fractions with
// denominators <= lead are at least 1/lead^2 apart, so once the bracket is
// narrower than that the simplest fraction inside is the only candidate.
std::optional<BigRational> rational_root_in(const UniPoly& g, Bracket& br) {
  auto ints = g.primitive_integer_coefficients();
  BigInteger lead = ints.back();
  if (lead < 0) lead = -lead;
  BigRational limit = rational(BigInteger(1), BigInteger(lead * lead));
  while (br.hi - br.lo >= limit) {
    halve(g, br);
    if (br.lo == br.hi) return br.lo;
  }
  BigRational candidate = simplest_between(br.lo, br.hi);
  if (g.sign_at(candidate) == 0) return candidate;
  return std::nullopt;
}

bool overlaps(const IsolatedRoot& a, const IsolatedRoot& b) { return std::max(a.lo, b.lo) < std::min(a.hi, b.hi); }

bool strictly_inside(const BigRational& x, const IsolatedRoot& r) { return r.lo < x && x < r.hi; }

bool same_root(const IsolatedRoot& a, const IsolatedRoot& b) {
  UniPoly g = gcd(a.poly, b.poly);
  if (g.degree() < 1) return false;
  BigRational lo = std::max(a.lo, b.lo);
  BigRational hi = std::min(a.hi, b.hi);
  return lo < hi && count_roots_open(g, lo, hi) > 0;
}

// Left anchor of a point used as a piece's left boundary, right anchor used as
// a right boundary: rationals that sit on the correct side of the point.
BigRational right_of(const RealPoint& p) {
  if (const auto* r = std::get_if<BigRational>(&p)) return *r;
  return std::get<IsolatedRoot>(p).hi;
}

BigRational left_of(const RealPoint& p) {
  if (const auto* r = std::get_if<BigRational>(&p)) return *r;
  return std::get<IsolatedRoot>(p).lo;
}

// Position used for sorting disjoint points.
const BigRational& sort_key(const RealPoint& p) {
  if (const auto* r = std::get_if<BigRational>(&p)) return *r;
  return std::get<IsolatedRoot>(p).lo;
}

// Refines isolating intervals until all points are disjoint and
// deduplicated, then sorts them.
std::vector<RealPoint> normalize_points(std::vector<BigRational> rationals, std::vector<IsolatedRoot> roots) {
  std::sort(rationals.begin(), rationals.end());
  rationals.erase(std::unique(rationals.begin(), rationals.end()), rationals.end());

  // Merge duplicate irrational roots and separate overlapping intervals.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < roots.size() && !changed; ++a) {
      for (std::size_t b = a + 1; b < roots.size() && !changed; ++b) {
        if (!overlaps(roots[a], roots[b])) continue;
        if (same_root(roots[a], roots[b])) {
          roots.erase(roots.begin() + static_cast<long>(b));
        } else {
          roots[a].refine();
          roots[b].refine();
        }
        changed = true;
      }
    }
  }
  for (auto& r : roots) {
    for (const auto& x : rationals) {
      while (strictly_inside(x, r) || x == r.lo || x == r.hi) r.refine();
    }
  }

  std::vector<RealPoint> points;
  points.reserve(rationals.size() + roots.size());
  for (auto& x : rationals) points.emplace_back(std::move(x));
  for (auto& r : roots) points.emplace_back(std::move(r));
  std::sort(points.begin(), points.end(),
            [](const RealPoint& a, const RealPoint& b) { return sort_key(a) < sort_key(b); });
  return points;
}

}  // namespace

void IsolatedRoot::refine() {
  BigRational m = (lo + hi) / 2;
  int sm = poly.sign_at(m);
  if (sm == 0) throw std::logic_error("IsolatedRoot::refine: root is rational");
  if (poly.sign_at(lo) == sm) {
    lo = m;
  } else {
    hi = m;
  }
}

std::string to_string(const RealPoint& point) {
  if (const auto* r = std::get_if<BigRational>(&point)) return to_string(*r);
  if (std::holds_alternative<PlusInfinity>(point)) return "inf";
  const auto& root = std::get<IsolatedRoot>(point);
  return "root of " + root.poly.to_string() + " in (" + to_string(root.lo) + ", " + to_string(root.hi) + ")";
}

Domain Domain::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.size() < 5) throw DomainError("bad domain '" + std::string(text) + "'");
  char open = s.front();
  char close = s.back();
  if ((open != '(' && open != '[') || (close != ')' && close != ']')) {
    throw DomainError("bad domain '" + std::string(text) + "': expected (a,b], [a,b) ...");
  }
  std::string body = s.substr(1, s.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string::npos) throw DomainError("bad domain '" + std::string(text) + "': missing comma");
  std::string lo_text = trim(body.substr(0, comma));
  std::string hi_text = trim(body.substr(comma + 1));
  Domain d;
  d.lo = parse_rational(lo_text);
  d.lo_closed = open == '[';
  if (is_infinity_token(hi_text)) {
    if (close == ']') throw DomainError("bad domain '" + std::string(text) + "': infinity cannot be closed");
    d.hi = std::nullopt;
    d.hi_closed = false;
  } else {
    d.hi = parse_rational(hi_text);
    d.hi_closed = close == ']';
  }
  return d;
}

bool Domain::empty() const {
  if (!hi) return false;
  if (lo > *hi) return true;
  if (lo == *hi) return !(lo_closed && hi_closed);
  return false;
}

bool Domain::contains(const BigRational& x) const {
  if (lo_closed ? x < lo : x <= lo) return false;
  if (!hi) return true;
  return hi_closed ? x <= *hi : x < *hi;
}

std::string Domain::to_string() const {
  std::string s = lo_closed ? "[" : "(";
  s += cesaro::to_string(lo) + ", ";
  if (hi) {
    s += cesaro::to_string(*hi) + (hi_closed ? "]" : ")");
  } else {
    s += "inf)";
  }
  return s;
}

std::vector<RealPoint> RootIsolation::sorted_points() const {
  std::vector<BigRational> rs;
  for (const auto& r : rational) rs.push_back(r.value);
  std::vector<IsolatedRoot> irr;
  for (const auto& r : irrational) irr.push_back(r.root);
  return normalize_points(std::move(rs), std::move(irr));
}

RootIsolation isolate_roots(const UniPoly& p, const Domain& domain) {
  if (p.is_zero()) throw DomainError("isolate_roots: zero polynomial");
  RootIsolation out;
  if (domain.empty() || p.degree() <= 0) return out;

  auto factors = squarefree_decomposition(p);
  for (std::size_t idx = 0; idx < factors.size(); ++idx) {
    auto multiplicity = static_cast<unsigned>(idx + 1);
    UniPoly g = factors[idx];
    if (g.degree() < 1) continue;

    // Endpoint roots are recorded (when the endpoint belongs to the domain)
    // and divided out, so the Sturm counts below see nonzero endpoint values.
    if (g.sign_at(domain.lo) == 0) {
      if (domain.lo_closed) out.rational.push_back({domain.lo, multiplicity});
      g = exact_divide(g, linear_factor(domain.lo));
    }
    BigRational hi;
    if (domain.hi) {
      hi = *domain.hi;
      if (g.degree() >= 1 && g.sign_at(hi) == 0) {
        if (domain.hi_closed && hi != domain.lo) out.rational.push_back({hi, multiplicity});
        g = exact_divide(g, linear_factor(hi));
      }
    } else {
      hi = std::max(cauchy_root_bound(g), BigRational(domain.lo + 1));
    }
    if (g.degree() < 1 || !(domain.lo < hi)) continue;

    auto chain = sturm_sequence(g);
    std::vector<Bracket> brackets;
    bisect(g, chain, domain.lo, sign_variations_at(chain, domain.lo), hi, sign_variations_at(chain, hi), brackets);
    for (auto& br : brackets) {
      if (auto r = rational_root_in(g, br)) {
        out.rational.push_back({*r, multiplicity});
        continue;
      }
      IsolatedRoot root{g, br.lo, br.hi};
      while (root.width() > kMaxIsolatingWidth) root.refine();
      out.irrational.push_back({std::move(root), multiplicity});
    }
  }

  // Factors are coprime, so no root repeats; only interval overlaps remain.
  std::vector<BigRational> rs;
  for (const auto& r : out.rational) rs.push_back(r.value);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < out.irrational.size(); ++a) {
      auto& ra = out.irrational[a].root;
      for (const auto& x : rs) {
        while (strictly_inside(x, ra) || x == ra.lo || x == ra.hi) ra.refine();
      }
      for (std::size_t b = a + 1; b < out.irrational.size(); ++b) {
        auto& rb = out.irrational[b].root;
        while (overlaps(ra, rb)) {
          ra.refine();
          rb.refine();
          changed = true;
        }
      }
    }
  }
  std::sort(out.rational.begin(), out.rational.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  std::sort(out.irrational.begin(), out.irrational.end(),
            [](const IrrationalRoot& a, const IrrationalRoot& b) { return a.root.lo < b.root.lo; });
  return out;
}

Sign to_sign(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }

char sign_symbol(Sign s) {
  switch (s) {
    case Sign::negative: return '-';
    case Sign::zero: return '0';
    case Sign::positive: return '+';
  }
  return '?';
}

std::string DomainPiece::to_string() const {
  if (point) return "{" + cesaro::to_string(left) + "}";
  return std::string(left_closed ? "[" : "(") + cesaro::to_string(left) + ", " + cesaro::to_string(right) +
         (right_closed ? "]" : ")");
}

std::vector<RealPoint> merged_roots(const std::vector<UniPoly>& polys, const Domain& domain) {
  std::vector<BigRational> rs;
  std::vector<IsolatedRoot> irr;
  for (const auto& p : polys) {
    if (p.degree() < 1) continue;
    auto iso = isolate_roots(p, domain);
    for (const auto& r : iso.rational) rs.push_back(r.value);
    for (const auto& r : iso.irrational) irr.push_back(r.root);
  }
  return normalize_points(std::move(rs), std::move(irr));
}

std::vector<DomainPiece> partition_domain(const std::vector<RealPoint>& sorted_points, const Domain& domain) {
  std::vector<DomainPiece> pieces;
  if (domain.empty()) return pieces;
  RealPoint left = domain.lo;
  bool left_closed = domain.lo_closed;
  bool at_left_end = true;
  for (const auto& p : sorted_points) {
    const auto* r = std::get_if<BigRational>(&p);
    bool is_lo = r != nullptr && *r == domain.lo;
    if (!(is_lo && at_left_end)) {
      pieces.push_back({left, left_closed, p, false, false});
    }
    pieces.push_back({p, true, p, true, true});
    left = p;
    left_closed = false;
    at_left_end = false;
  }
  RealPoint right = domain.hi ? RealPoint(*domain.hi) : RealPoint(PlusInfinity{});
  bool ends_on_hi = false;
  if (!sorted_points.empty() && domain.hi) {
    const auto* r = std::get_if<BigRational>(&sorted_points.back());
    ends_on_hi = r != nullptr && *r == *domain.hi;
  }
  if (!ends_on_hi) {
    bool degenerate = sorted_points.empty() && domain.hi && domain.lo == *domain.hi;
    if (degenerate) {
      pieces.push_back({left, true, left, true, true});
    } else {
      pieces.push_back({left, left_closed, right, domain.hi_closed, false});
    }
  }
  return pieces;
}

Sign sign_on_piece(const UniPoly& p, const DomainPiece& piece) {
  if (p.is_zero()) return Sign::zero;
  if (piece.point) {
    if (const auto* r = std::get_if<BigRational>(&piece.left)) return to_sign(p.sign_at(*r));
    IsolatedRoot root = std::get<IsolatedRoot>(piece.left);
    UniPoly common = gcd(p, root.poly);
    if (common.degree() >= 1 && count_roots_open(common, root.lo, root.hi) > 0) return Sign::zero;
    // p does not vanish at the root: shrink until p has no root in [lo, hi].
    while (p.sign_at(root.lo) == 0 || p.sign_at(root.hi) == 0 || count_roots_open(p, root.lo, root.hi) > 0) {
      root.refine();
    }
    return to_sign(p.sign_at(root.lo));
  }

  RealPoint left = piece.left;
  RealPoint right = piece.right;
  BigRational a = right_of(left);
  if (std::holds_alternative<PlusInfinity>(right)) return to_sign(p.sign_at(a + 1));
  BigRational b = left_of(right);
  while (!(a < b)) {
    if (auto* r = std::get_if<IsolatedRoot>(&left)) r->refine();
    if (auto* r = std::get_if<IsolatedRoot>(&right)) r->refine();
    a = right_of(left);
    b = left_of(right);
  }
  return to_sign(p.sign_at((a + b) / 2));
}

std::vector<SignPiece> sign_between_roots(const UniPoly& p, const RootIsolation& isolation, const Domain& domain) {
  std::vector<SignPiece> out;
  for (auto& piece : partition_domain(isolation.sorted_points(), domain)) {
    Sign s = sign_on_piece(p, piece);
    out.push_back({std::move(piece), s});
  }
  return out;
}

}  // namespace cesaro
