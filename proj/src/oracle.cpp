#include "fatpoints/oracle.hpp"

#include <algorithm>
#include <future>
#include <random>

#include "fatpoints/errors.hpp"

namespace fatpoints {

namespace {

using u64 = std::uint64_t;
using Row = std::vector<u64>;

u64 mul(u64 a, u64 b, u64 p) { return a * b % p; }
u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 sub(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

u64 power(u64 base, u64 exp, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 inverse(u64 a, u64 p) { return power(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Falling factorial n (n-1) ... (n-k+1) mod p; zero when k > n.
u64 falling(int n, int k, u64 p) {
  if (k > n) return 0;
  u64 v = 1;
  for (int i = 0; i < k; ++i) v = mul(v, static_cast<u64>(n - i), p);
  return v;
}

// In-place reduced row echelon form. Returns the pivot columns.
std::vector<std::size_t> rref(std::vector<Row>& rows, std::size_t cols, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t pick = next;
    while (pick < rows.size() && rows[pick][c] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[next], rows[pick]);
    const u64 inv = inverse(rows[next][c], p);
    for (auto& x : rows[next]) x = mul(x, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || rows[i][c] == 0) continue;
      const u64 factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[i][k] = sub(rows[i][k], mul(factor, rows[next][k], p), p);
    }
    pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

std::vector<Row> nullspace(std::vector<Row> rows, std::size_t cols, u64 p) {
  auto pivots = rref(rows, cols, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = sub(0, rows[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t monomial_index(int b, int c) {
  // Position of x^a y^b z^c in monomials(t): grouped by a descending, i.e. by
  // k = b + c ascending, then b descending.
  const int k = b + c;
  return static_cast<std::size_t>(k * (k + 1) / 2 + c);
}

std::vector<Row> condition_rows(const PointSet& pts, const std::vector<int>& mults, int t) {
  const u64 p = pts.prime;
  const auto mons = monomials(t);
  std::vector<Row> rows;
  for (std::size_t i = 0; i < pts.points.size(); ++i) {
    const int m = mults[i];
    if (m == 0) continue;
    const int order = std::min(m - 1, t);
    const auto& pt = pts.points[i];
    std::array<std::vector<u64>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[v].assign(static_cast<std::size_t>(t + 1), 1);
      for (int e = 1; e <= t; ++e) pw[v][e] = mul(pw[v][e - 1], pt[v], p);
    }
    for (const auto& d : monomials(order)) {
      Row row(mons.size(), 0);
      for (std::size_t k = 0; k < mons.size(); ++k) {
        const auto& e = mons[k];
        u64 v = 1;
        for (int s = 0; s < 3 && v != 0; ++s) {
          v = mul(v, falling(e[s], d[s], p), p);
          if (v != 0) v = mul(v, pw[s][static_cast<std::size_t>(e[s] - d[s])], p);
        }
        row[k] = v;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void require_mults(const PointSet& pts, const std::vector<int>& mults, int t) {
  if (mults.size() != pts.points.size())
    throw ArgumentError("multiplicity count differs from the number of points");
  for (int m : mults)
    if (m < 0) throw ArgumentError("the oracle only handles nonnegative multiplicities");
  if (static_cast<u64>(std::max(t, 0)) >= pts.prime)
    throw ConfigError("modulus must exceed the working degree");
}

using Poly = std::vector<u64>;  // coefficients, low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = add(c[i + j], mul(a[i], b[j], p), p);
  return c;
}

Poly poly_mod(Poly a, const Poly& b, u64 p) {
  trim(a);
  const u64 lead_inv = inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 q = mul(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = sub(a[shift + i], mul(q, b[i], p), p);
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// f(A + sB) as a polynomial in s.
Poly restrict_to_line(const Row& form, int t, const Point& a, const Point& b, u64 p) {
  std::array<std::vector<Poly>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v].push_back({1});
    const Poly lin{a[v], b[v]};
    for (int e = 1; e <= t; ++e) pw[v].push_back(poly_mul(pw[v].back(), lin, p));
  }
  Poly out(static_cast<std::size_t>(t + 1), 0);
  const auto mons = monomials(t);
  for (std::size_t k = 0; k < mons.size(); ++k) {
    if (form[k] == 0) continue;
    const auto& e = mons[k];
    auto term = poly_mul(poly_mul(pw[0][e[0]], pw[1][e[1]], p), pw[2][e[2]], p);
    for (std::size_t i = 0; i < term.size(); ++i)
      out[i] = add(out[i], mul(form[k], term[i], p), p);
  }
  trim(out);
  return out;
}

Point random_point(std::mt19937_64& rng, u64 p) {
  std::uniform_int_distribution<u64> coord(0, p - 1);
  Point pt{};
  do {
    pt = {coord(rng), coord(rng), coord(rng)};
  } while (pt[0] == 0 && pt[1] == 0 && pt[2] == 0);
  return pt;
}

Point normalize(Point pt, u64 p) {
  std::size_t lead = 0;
  while (pt[lead] == 0) ++lead;
  const u64 inv = inverse(pt[lead], p);
  for (auto& x : pt) x = mul(x, inv, p);
  return pt;
}

}  // namespace

void validate(const OracleConfig& cfg, int max_multiplicity, int working_degree) {
  if (cfg.trials < 1) throw ConfigError("trials must be positive");
  if (cfg.prime >= (u64{1} << 31)) throw ConfigError("modulus must be below 2^31");
  if (!is_prime(cfg.prime)) throw ConfigError(std::to_string(cfg.prime) + " is not prime");
  if (cfg.prime <= static_cast<u64>(std::max(working_degree, 0)))
    throw ConfigError("modulus must exceed the working degree " + std::to_string(working_degree));
  if (cfg.prime <= static_cast<u64>(2 * std::max(max_multiplicity, 0)))
    throw ConfigError("modulus must exceed twice the largest multiplicity");
}

std::vector<std::array<int, 3>> monomials(int t) {
  std::vector<std::array<int, 3>> out;
  if (t < 0) return out;
  for (int a = t; a >= 0; --a)
    for (int b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b});
  return out;
}

PointSet sample_points(int r, const OracleConfig& cfg, int trial) {
  if (r < 0 || r > kMaxPoints) throw UnsupportedError("the oracle samples at most 8 points");
  std::seed_seq seq{cfg.seed, static_cast<u64>(trial)};
  std::mt19937_64 rng(seq);
  PointSet out{cfg.prime, {}};
  std::vector<Point> normalized;
  while (static_cast<int>(out.points.size()) < r) {
    auto pt = random_point(rng, cfg.prime);
    auto n = normalize(pt, cfg.prime);
    if (std::find(normalized.begin(), normalized.end(), n) != normalized.end()) continue;
    normalized.push_back(n);
    out.points.push_back(pt);
  }
  return out;
}

int rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const auto cols = rows.front().size();
  return static_cast<int>(rref(rows, cols, p).size());
}

std::vector<std::vector<std::uint64_t>> ideal_basis(const PointSet& pts,
                                                     const std::vector<int>& mults, int t) {
  require_mults(pts, mults, t);
  if (t < 0) return {};
  return nullspace(condition_rows(pts, mults, t), monomials(t).size(), pts.prime);
}

int ideal_basis_dim(const PointSet& pts, const std::vector<int>& mults, int t) {
  require_mults(pts, mults, t);
  if (t < 0) return 0;
  const int cols = forms_of_degree(t);
  return cols - rank_mod_p(condition_rows(pts, mults, t), pts.prime);
}

int mu_rank(const PointSet& pts, const std::vector<int>& mults, int t) {
  require_mults(pts, mults, t + 1);
  const u64 p = pts.prime;
  const auto basis = ideal_basis(pts, mults, t);
  const auto mons = monomials(t);
  const auto cols = static_cast<std::size_t>(forms_of_degree(t + 1));
  std::vector<Row> products;
  for (const auto& f : basis) {
    for (int v = 0; v < 3; ++v) {
      Row row(cols, 0);
      for (std::size_t k = 0; k < mons.size(); ++k) {
        if (f[k] == 0) continue;
        auto e = mons[k];
        ++e[static_cast<std::size_t>(v)];
        row[monomial_index(e[1], e[2])] = f[k];
      }
      products.push_back(std::move(row));
    }
  }
  return rank_mod_p(std::move(products), p);
}

bool has_common_factor(const PointSet& pts, const std::vector<int>& mults, int t,
                       std::uint64_t seed) {
  const u64 p = pts.prime;
  const auto basis = ideal_basis(pts, mults, t);
  if (basis.empty()) throw PreconditionError("no forms of this degree vanish on Z");
  if (t == 0) return false;
  if (basis.size() == 1) return true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> coef(1, p - 1);
  auto combine = [&] {
    Row f(basis.front().size(), 0);
    for (const auto& b : basis) {
      const u64 c = coef(rng);
      for (std::size_t k = 0; k < f.size(); ++k) f[k] = add(f[k], mul(c, b[k], p), p);
    }
    return f;
  };
  const auto f = combine();
  const auto g = combine();
  for (int attempt = 0; attempt < 8; ++attempt) {
    const auto a = random_point(rng, p);
    const auto b = random_point(rng, p);
    auto fr = restrict_to_line(f, t, a, b, p);
    auto gr = restrict_to_line(g, t, a, b, p);
    // A line inside the zero set of f or g: draw another.
    if (fr.empty() || gr.empty()) continue;
    return gcd_degree(std::move(fr), std::move(gr), p) > 0;
  }
  throw InvariantError("could not find a line meeting the linear system properly");
}

namespace {

struct TrialWork {
  PointSet pts;
  TrialTables tables;
  int sigma = 0;
};

}  // namespace

OracleReport oracle_resolve(const FatPointScheme& z, const OracleConfig& cfg) {
  const auto& mults = z.mults();
  const int top = cfg.max_degree > 0 ? cfg.max_degree : z.total_multiplicity() + 4;
  const int max_mult = mults.empty() ? 0 : *std::max_element(mults.begin(), mults.end());
  validate(cfg, max_mult, top + 1);
  const int length = z.length();

  // The Hilbert function of Z reaches its length at some sigma; the ideal is
  // then generated in degrees <= sigma + 1 with syzygies in degrees <= sigma + 2.
  std::vector<TrialWork> work(static_cast<std::size_t>(cfg.trials));
  {
    std::vector<std::future<void>> jobs;
    for (int k = 0; k < cfg.trials; ++k) {
      jobs.push_back(std::async(std::launch::async, [&, k] {
        auto& w = work[static_cast<std::size_t>(k)];
        w.pts = sample_points(z.r(), cfg, k);
        for (int t = 0;; ++t) {
          if (t + 3 > top)
            throw ConfigError("oracle window exceeds max_degree " + std::to_string(top));
          w.tables.hilbert.push_back(ideal_basis_dim(w.pts, mults, t));
          if (w.tables.hilbert.back() == forms_of_degree(t) - length) {
            w.sigma = t;
            break;
          }
        }
      }));
    }
    for (auto& j : jobs) j.get();
  }
  int last = 0;
  for (const auto& w : work) last = std::max(last, w.sigma + 3);

  {
    std::vector<std::future<void>> jobs;
    for (int k = 0; k < cfg.trials; ++k) {
      jobs.push_back(std::async(std::launch::async, [&, k] {
        auto& w = work[static_cast<std::size_t>(k)];
        auto& tb = w.tables;
        for (int t = static_cast<int>(tb.hilbert.size()); t <= last; ++t)
          tb.hilbert.push_back(ideal_basis_dim(w.pts, mults, t));
        tb.mu_ranks.assign(static_cast<std::size_t>(last), 0);
        for (int t = 0; t < last; ++t)
          if (tb.hilbert[t] > 0) tb.mu_ranks[t] = mu_rank(w.pts, mults, t);
        tb.generators.assign(static_cast<std::size_t>(last + 1), 0);
        tb.generators[0] = tb.hilbert[0];
        for (int t = 1; t <= last; ++t) tb.generators[t] = tb.hilbert[t] - tb.mu_ranks[t - 1];
        tb.alpha = static_cast<int>(std::find_if(tb.hilbert.begin(), tb.hilbert.end(),
                                                 [](int h) { return h > 0; }) -
                                    tb.hilbert.begin());
        tb.beta = -1;
        for (int t = tb.alpha; t <= last; ++t) {
          if (!has_common_factor(w.pts, mults, t, cfg.seed * 7919 + static_cast<u64>(k))) {
            tb.beta = t;
            break;
          }
        }
        FATPOINTS_CHECK(tb.beta >= 0, "oracle found no fixed-component free degree");
      }));
    }
    for (auto& j : jobs) j.get();
  }

  OracleReport report;
  report.prime = cfg.prime;
  report.seed = cfg.seed;
  report.trials = cfg.trials;

  std::vector<int> hilbert(static_cast<std::size_t>(last + 1));
  for (int t = 0; t <= last; ++t) {
    int best = work.front().tables.hilbert[t];
    for (const auto& w : work) best = std::min(best, w.tables.hilbert[t]);
    hilbert[t] = best;
  }
  std::vector<const TrialWork*> consistent;
  for (const auto& w : work)
    if (w.tables.hilbert == hilbert) consistent.push_back(&w);
  if (consistent.empty()) {
    report.disagreements.push_back("no trial attains the minimum Hilbert function in every degree");
    for (const auto& w : work) consistent.push_back(&w);
  }

  auto& s = report.summary;
  s.r = z.r();
  s.mults = mults;
  s.degenerate = z.is_zero();
  for (int t = 0; t <= last; ++t) {
    s.hilbert[t] = hilbert[t];
    int nu = consistent.front()->tables.generators[t];
    for (const auto* w : consistent) nu = std::min(nu, w->tables.generators[t]);
    if (nu > 0) s.generators[t] = nu;
  }
  s.alpha = consistent.front()->tables.alpha;
  s.beta = consistent.front()->tables.beta;
  for (const auto* w : consistent) s.beta = std::min(s.beta, w->tables.beta);

  for (std::size_t k = 0; k < work.size(); ++k) {
    const auto& tb = work[k].tables;
    const std::string who = "trial " + std::to_string(k);
    for (int t = 0; t <= last; ++t) {
      if (tb.hilbert[t] != hilbert[t])
        report.disagreements.push_back(who + ": dim I_" + std::to_string(t) + " = " +
                                       std::to_string(tb.hilbert[t]) + " (reported " +
                                       std::to_string(hilbert[t]) + ")");
      const int nu = s.generators.count(t) ? s.generators.at(t) : 0;
      if (tb.generators[t] != nu)
        report.disagreements.push_back(who + ": nu_" + std::to_string(t) + " = " +
                                       std::to_string(tb.generators[t]) + " (reported " +
                                       std::to_string(nu) + ")");
    }
    if (tb.beta != s.beta)
      report.disagreements.push_back(who + ": beta = " + std::to_string(tb.beta) + " (reported " +
                                     std::to_string(s.beta) + ")");
    report.per_trial.push_back(tb);
  }

  s.syzygies = syzygies_from_hilbert(s.generators, s.hilbert, last);
  s.display = render_resolution(s.generators, s.syzygies);
  return report;
}

}  // namespace fatpoints
