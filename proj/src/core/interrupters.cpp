#include "cesaro/interrupters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cesaro/errors.hpp"
#include "cesaro/telescope.hpp"

namespace cesaro {

BigRational p_entry(unsigned order, const BigRational& alpha, std::size_t n) {
  require_order(order);
  require_alpha(alpha);
  BigRational num = 1;
  BigRational den = 1;
  for (unsigned m = 1; m <= order; ++m) {
    num *= BigRational(static_cast<unsigned long>(n + m)) + alpha;
    den *= BigRational(static_cast<unsigned long>(n + order + m)) + alpha;
  }
  return num / den;
}

DiagonalInterrupter::DiagonalInterrupter(unsigned order, BigRational alpha) : order_(order), alpha_(std::move(alpha)) {
  require_order(order_);
  require_alpha(alpha_);
}

namespace {

UniPoly poly(std::initializer_list<long> coeffs) {
  std::vector<BigRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly lin(long constant) { return poly({constant, 1}); }  // alpha + constant

UniPoly scaled(const UniPoly& p, long num, long den) { return p * UniPoly(rational(num, den)); }

}  // namespace

UniPolyMatrix fixture_q_order3_symbolic() {
  const UniPoly a = UniPoly::x();
  const UniPoly common = lin(1) * lin(2) * lin(3);  // (1+a)(2+a)(3+a)

  UniPoly q00 = scaled(poly({10, 12, 3}) * common, 1, 60);
  UniPoly q01 = scaled(a * poly({11, 4}) * common, -1, 40);
  UniPoly q02 = scaled(a * poly({3, 2}) * common, 1, 40);
  UniPoly q11 = scaled(poly({5, -1, 15, 6}) * lin(2) * lin(3), 1, 30);
  UniPoly q12 = scaled(a * common * poly({1, 4}), -1, 40);
  UniPoly q22 = scaled(poly({20, -6, 7, 6, 3}) * lin(3), 1, 60);

  return {{q00, q01, q02}, {q01, q11, q12}, {q02, q12, q22}};
}

CornerInterrupter fixture_q_order3(const BigRational& alpha) {
  require_alpha(alpha);
  auto sym = fixture_q_order3_symbolic();
  RationalMatrix corner(3, 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) corner(a, b) = sym[a][b](alpha);
  return CornerInterrupter(std::move(corner));
}

ClosedFormProvider telescoped_closed_form(unsigned order, const BigRational& alpha) {
  require_order(order);
  require_alpha(alpha);
  auto form = cached_telescope(order);
  return [form, alpha](std::size_t i, std::size_t j) {
    return form->at_zero(alpha, std::min(i, j), std::max(i, j));
  };
}

CornerInterrupter solve_corner(unsigned order, const BigRational& alpha, std::size_t corner_size,
                               const ClosedFormProvider& rhs) {
  if (corner_size < 1) throw DomainError("corner size must be >= 1");
  CesaroMatrix m(order, alpha);
  const std::size_t c = corner_size;
  const RationalMatrix lower = truncate(m, c).values();

  // Y = M_c^{-1} S_c, column by column.
  RationalMatrix y(c, c);
  for (std::size_t col = 0; col < c; ++col) {
    std::vector<BigRational> s(c);
    for (std::size_t r = 0; r < c; ++r) s[r] = rhs(r, col);
    auto x = forward_substitute(lower, s);
    for (std::size_t r = 0; r < c; ++r) y(r, col) = x[r];
  }
  // Q_c = Y M_c^{-T}, i.e. Q_c^T = M_c^{-1} Y^T; Q_c is symmetric anyway.
  RationalMatrix yt = y.transpose();
  RationalMatrix q(c, c);
  for (std::size_t col = 0; col < c; ++col) {
    std::vector<BigRational> s(c);
    for (std::size_t r = 0; r < c; ++r) s[r] = yt(r, col);
    auto x = forward_substitute(lower, s);
    for (std::size_t r = 0; r < c; ++r) q(col, r) = x[r];
  }
  return CornerInterrupter(std::move(q));
}

CornerInterrupter solve_corner(unsigned order, const BigRational& alpha, std::size_t corner_size) {
  return solve_corner(order, alpha, corner_size, telescoped_closed_form(order, alpha));
}

const char* to_string(CornerProvenance p) {
  switch (p) {
    case CornerProvenance::fixture: return "fixture";
    case CornerProvenance::solved: return "solved";
    case CornerProvenance::identity: return "identity";
  }
  return "?";
}

std::string IdentityReport::status() const {
  if (!mismatch) return "verified";
  return "mismatch at (" + std::to_string(mismatch->i) + ", " + std::to_string(mismatch->j) +
         "): " + cesaro::to_string(mismatch->lhs) + " vs " + cesaro::to_string(mismatch->rhs);
}

IdentityReport verify_consistency(const CesaroMatrix& m, const InterrupterPair& pair, std::size_t n_check,
                                  const ClosedFormProvider& rhs, unsigned jobs) {
  IdentityReport report;
  report.order = m.order();
  report.alpha = m.alpha();
  report.n_check = n_check;
  report.corner_size = pair.q.corner_size();
  report.corner = pair.q;

  const std::size_t rows = n_check + 1;
  // Warm the row memo once so worker threads mostly read.
  m.row(n_check);

  std::vector<std::optional<Mismatch>> first_in_row(rows);
  std::vector<std::size_t> compared(rows, 0);
  auto check_row = [&](std::size_t i) {
    for (std::size_t j = 0; j <= n_check; ++j) {
      BigRational lhs = mqm_star_entry(m, pair.q, i, j);
      BigRational expected = rhs(i, j);
      ++compared[i];
      if (lhs != expected) {
        first_in_row[i] = Mismatch{i, j, lhs, expected};
        return;
      }
    }
  };

  unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(rows)));
  if (workers == 1) {
    for (std::size_t i = 0; i < rows; ++i) {
      check_row(i);
      if (first_in_row[i]) break;
    }
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < rows; i += workers) check_row(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < rows; ++i) {
    report.compared_entries += compared[i];
    if (first_in_row[i] && !report.mismatch) report.mismatch = first_in_row[i];
  }
  return report;
}

IdentityReport verify_consistency(const CesaroMatrix& m, const InterrupterPair& pair, std::size_t n_check,
                                  unsigned jobs) {
  return verify_consistency(m, pair, n_check, telescoped_closed_form(m.order(), m.alpha()), jobs);
}

RationalMatrix SymbolicCorner::at(const BigRational& alpha) const {
  RationalMatrix out(size, size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) out(a, b) = entries[a][b](alpha);
  return out;
}

namespace {

// Sample and held-out abscissae, all > -1 and pairwise distinct.
BigRational sample_alpha(std::size_t s) { return rational(static_cast<long>(s), 2) - rational(1, 3); }

const BigRational kHeldOut[] = {rational(7, 5), rational(13, 7), rational(29, 11)};

}  // namespace

SymbolicCorner interpolate_symbolic_corner(unsigned order, std::size_t corner_size) {
  require_order(order);
  const std::size_t c = corner_size;
  std::map<std::size_t, RationalMatrix> solved;  // sample index -> corner
  auto corner_at = [&](std::size_t s) -> const RationalMatrix& {
    auto it = solved.find(s);
    if (it == solved.end()) it = solved.emplace(s, solve_corner(order, sample_alpha(s), c).corner()).first;
    return it->second;
  };
  std::vector<RationalMatrix> held_out;
  for (const auto& h : kHeldOut) held_out.push_back(solve_corner(order, h, c).corner());

  for (unsigned bound = 2 * order + 2; bound <= 8 * order + 8; bound *= 2) {
    const std::size_t samples = 2 * static_cast<std::size_t>(bound) + 2;
    std::vector<BigRational> xs;
    for (std::size_t s = 0; s < samples; ++s) xs.push_back(sample_alpha(s));

    SymbolicCorner out;
    out.order = order;
    out.size = c;
    out.degree_bound = bound;
    out.samples_used = samples;
    out.entries.assign(c, std::vector<UniRational>(c));
    bool ok = true;
    for (std::size_t a = 0; a < c && ok; ++a) {
      for (std::size_t b = a; b < c && ok; ++b) {
        std::vector<BigRational> ys;
        for (std::size_t s = 0; s < samples; ++s) ys.push_back(corner_at(s)(a, b));
        auto fit = interpolate_rational(xs, ys, bound);
        if (!fit) {
          ok = false;
          break;
        }
        for (std::size_t h = 0; h < held_out.size() && ok; ++h) {
          ok = fit->den(kHeldOut[h]) != 0 && (*fit)(kHeldOut[h]) == held_out[h](a, b);
        }
        out.entries[a][b] = *fit;
        out.entries[b][a] = *fit;
      }
    }
    if (ok) return out;
  }
  throw std::runtime_error("symbolic corner: no rational reconstruction validated for order " +
                           std::to_string(order));
}

SymbolicCorner fixture_symbolic_corner_order3() {
  SymbolicCorner out;
  out.order = 3;
  out.size = 3;
  out.from_fixture = true;
  auto sym = fixture_q_order3_symbolic();
  out.entries.assign(3, std::vector<UniRational>(3));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) out.entries[a][b] = UniRational{sym[a][b], UniPoly(1)};
  return out;
}

const SymbolicCorner& symbolic_corner(unsigned order, std::size_t corner_size) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, std::size_t>, std::unique_ptr<SymbolicCorner>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(order, corner_size);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto corner = std::make_unique<SymbolicCorner>(order == 3 && corner_size == 3 ? fixture_symbolic_corner_order3()
                                                                                   : interpolate_symbolic_corner(order, corner_size));
    it = cache.emplace(key, std::move(corner)).first;
  }
  return *it->second;
}

}  // namespace cesaro
