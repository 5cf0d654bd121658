#include "fatpoints/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fatpoints/cohom.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/mu.hpp"

namespace fatpoints {

FatPointScheme::FatPointScheme(std::vector<int> mults) : mults_(std::move(mults)) {
  if (mults_.size() > static_cast<std::size_t>(kMaxPoints))
    throw UnsupportedError("at most 8 points are supported");
  for (int m : mults_)
    if (m < 0) throw ArgumentError("fat point multiplicities must be nonnegative");
}

bool FatPointScheme::is_zero() const {
  return std::all_of(mults_.begin(), mults_.end(), [](int m) { return m == 0; });
}

int FatPointScheme::total_multiplicity() const {
  return std::accumulate(mults_.begin(), mults_.end(), 0);
}

int FatPointScheme::length() const {
  int n = 0;
  for (int m : mults_) n += m * (m + 1) / 2;
  return n;
}

DivisorClass degree_class(const FatPointScheme& z, int t) { return DivisorClass(t, z.mults()); }

int hilbert_function(const FatPointScheme& z, int t) { return h0(degree_class(z, t)); }

int forms_of_degree(int t) { return t < 0 ? 0 : (t + 1) * (t + 2) / 2; }

int alpha(const FatPointScheme& z) {
  const int bound = z.total_multiplicity();
  for (int t = 0; t <= bound; ++t)
    if (hilbert_function(z, t) > 0) return t;
  throw InvariantError("no form of degree <= sum of multiplicities vanishes on Z");
}

int beta(const FatPointScheme& z) {
  if (z.r() > 7) throw UnsupportedError("beta is computed for r <= 7");
  if (z.is_zero()) return 0;
  const int a = alpha(z);
  // The product of m_i general lines through each p_i, times any form, is free.
  const int bound = 2 * z.total_multiplicity() + 2;
  for (int t = a; t <= bound; ++t)
    if (strip_fixed_components(degree_class(z, t)).fixed.empty()) return t;
  throw InvariantError("no fixed-component free degree found for Z");
}

DegreeTable syzygies_from_hilbert(const DegreeTable& generators, const DegreeTable& hilbert,
                                  int last) {
  DegreeTable syz;
  for (int t = 0; t <= last; ++t) {
    auto it = hilbert.find(t);
    FATPOINTS_CHECK(it != hilbert.end(), "Hilbert table misses degree " + std::to_string(t));
    long long value = -it->second;
    for (auto [j, n] : generators) value += static_cast<long long>(n) * forms_of_degree(t - j);
    for (auto [j, n] : syz) value -= static_cast<long long>(n) * forms_of_degree(t - j);
    FATPOINTS_CHECK(value >= 0, "negative syzygy count in degree " + std::to_string(t));
    if (value > 0) syz[t] = static_cast<int>(value);
  }
  return syz;
}

namespace {

std::string render_module(const DegreeTable& table) {
  if (table.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [t, n] : table) {
    if (!first) os << '+';
    first = false;
    if (n != 1) os << n;
    if (t == 0)
      os << 'R';
    else
      os << "R(-" << t << ')';
  }
  return os.str();
}

struct Window {
  DegreeTable hilbert;
  DegreeTable generators;
  int last = 0;
};

Window compute_window(const FatPointScheme& z, int a, int b) {
  Window w;
  auto hilb = [&](int t) {
    auto [it, inserted] = w.hilbert.try_emplace(t, 0);
    if (inserted) it->second = hilbert_function(z, t);
    return it->second;
  };
  // nu_{t+1} = cok mu_{F_t}. Below alpha - 1 both sides vanish.
  int zero_run = 0;
  int t = a;
  for (;; ++t) {
    for (int s = 0; s <= t; ++s) hilb(s);
    const int nu = t == 0 ? hilb(0) : mu_dims(degree_class(z, t - 1)).cok;
    if (nu > 0) {
      FATPOINTS_CHECK(t <= b + 2, "generator in degree " + std::to_string(t) +
                                      " exceeds beta + 2 = " + std::to_string(b + 2));
      w.generators[t] = nu;
      zero_run = 0;
    } else {
      ++zero_run;
    }
    if (t >= b + 5 && zero_run >= 3) break;
  }
  w.last = t;
  return w;
}

}  // namespace

std::string render_resolution(const DegreeTable& generators, const DegreeTable& syzygies) {
  return "0 -> " + render_module(syzygies) + " -> " + render_module(generators) + " -> I -> 0";
}

ResolutionSummary resolve(const FatPointScheme& z) {
  if (z.r() > 7) throw UnsupportedError("resolutions are computed for r <= 7");
  ResolutionSummary out;
  out.r = z.r();
  out.mults = z.mults();
  out.degenerate = z.is_zero();
  out.alpha = alpha(z);
  out.beta = beta(z);

  auto w = compute_window(z, out.alpha, out.beta);
  out.hilbert = w.hilbert;
  out.generators = w.generators;
  out.syzygies = syzygies_from_hilbert(out.generators, out.hilbert, w.last);
  for (auto [t, n] : out.syzygies) {
    (void)n;
    FATPOINTS_CHECK(t <= out.beta + 2, "syzygy in degree " + std::to_string(t) +
                                           " exceeds beta + 2 = " + std::to_string(out.beta + 2));
  }

  int rank = 0;
  for (auto [t, n] : out.generators) rank += n;
  for (auto [t, n] : out.syzygies) rank -= n;
  FATPOINTS_CHECK(rank == 1, "rank identity fails: sum nu - sum s = " + std::to_string(rank));

  for (int t = 0; t <= w.last + 5; ++t) {
    long long expected = 0;
    for (auto [j, n] : out.generators) expected += static_cast<long long>(n) * forms_of_degree(t - j);
    for (auto [j, n] : out.syzygies) expected -= static_cast<long long>(n) * forms_of_degree(t - j);
    FATPOINTS_CHECK(expected == hilbert_function(z, t),
                    "Hilbert identity fails in degree " + std::to_string(t));
  }
  FATPOINTS_CHECK(out.generators.empty() || out.generators.begin()->first == out.alpha,
                  "lowest generator degree differs from alpha");
  FATPOINTS_CHECK(out.hilbert.at(out.alpha) == out.generators.at(out.alpha),
                  "hilbert(alpha) differs from nu_alpha");

  out.display = render_resolution(out.generators, out.syzygies);
  return out;
}

DegreeTable generator_degrees(const FatPointScheme& z) { return resolve(z).generators; }

DegreeTable syzygy_degrees(const FatPointScheme& z) { return resolve(z).syzygies; }

}  // namespace fatpoints
