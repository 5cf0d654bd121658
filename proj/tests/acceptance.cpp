// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fatpoints/cli.hpp"
#include "fatpoints/cohom.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/mu.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/picard.hpp"
#include "fatpoints/resolution.hpp"

using namespace fatpoints;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string why) {
    pass = false;
    if (problems.size() < 10) problems.push_back(std::move(why));
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

std::string str(const DegreeTable& t) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : t) {
    os << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string str(const std::vector<int>& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  return os.str();
}

// ker and cok of the literal multiplication matrix in degree t, required to
// agree across all trials.
struct OracleMu {
  bool consistent = true;
  int ker = 0, cok = 0;
};

OracleMu oracle_mu(const std::vector<int>& mults, int t, int trials = 3) {
  OracleConfig cfg;
  OracleMu out;
  for (int k = 0; k < trials; ++k) {
    const auto pts = sample_points(static_cast<int>(mults.size()), cfg, k);
    const int rank = mu_rank(pts, mults, t);
    const int ker = 3 * ideal_basis_dim(pts, mults, t) - rank;
    const int cok = ideal_basis_dim(pts, mults, t + 1) - rank;
    if (k == 0) {
      out.ker = ker;
      out.cok = cok;
    } else if (ker != out.ker || cok != out.cok) {
      out.consistent = false;
    }
  }
  return out;
}

// Compares the symbolic resolution of z with the oracle's tables.
void compare_with_oracle(const FatPointScheme& z, Outcome& o) {
  const auto sym = resolve(z);
  const auto orc = oracle_resolve(z);
  const auto& os = orc.summary;
  const std::string name = "Z=(" + str(z.mults()) + ")";
  if (sym.generators != os.generators)
    o.fail(name + ": generators " + str(sym.generators) + " vs oracle " + str(os.generators));
  if (sym.syzygies != os.syzygies)
    o.fail(name + ": syzygies " + str(sym.syzygies) + " vs oracle " + str(os.syzygies));
  if (sym.alpha != os.alpha || sym.beta != os.beta)
    o.fail(name + ": alpha/beta differ from the oracle");
  for (const auto& [t, v] : os.hilbert)
    if (hilbert_function(z, t) != v)
      o.fail(name + ": hilbert(" + std::to_string(t) + ") = " +
             std::to_string(hilbert_function(z, t)) + " vs oracle " + std::to_string(v));
  for (const auto& [t, v] : sym.hilbert)
    if (os.hilbert.count(t) && os.hilbert.at(t) != v)
      o.fail(name + ": symbolic hilbert table differs at " + std::to_string(t));
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  const int count = 250;
  for (int i = 0; i < count; ++i) {
    const int r = static_cast<int>(rng() % 8);
    std::vector<int> m(static_cast<std::size_t>(r));
    for (auto& x : m) x = static_cast<int>(rng() % 6);
    compare_with_oracle(FatPointScheme(m), o);
  }
  const double secs = seconds_since(t0);
  if (secs >= 120.0) o.fail("runtime " + fmt_seconds(secs) + " exceeds 2 minutes");
  o.detail = std::to_string(count) + " random schemes (r <= 7, m <= 5), 3 trials mod 1000003, " +
             fmt_seconds(secs);
  return o;
}

Outcome fast_path_equality() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto classes = sorted_nef_classes(7, 12);
  for (const auto& f : classes) {
    const auto fast = fast_path_nef7(f);
    const auto slow = mu_dims(f);
    if (fast.ker != slow.ker || fast.cok != slow.cok)
      o.fail(format_class(f) + ": closed form (" + std::to_string(fast.ker) + "," +
             std::to_string(fast.cok) + ") vs reduction (" + std::to_string(slow.ker) + "," +
             std::to_string(slow.cok) + ")");
  }
  o.detail = std::to_string(classes.size()) + " nef classes at r = 7, degree <= 12, " +
             fmt_seconds(seconds_since(t0));
  return o;
}

Outcome exception_families() {
  Outcome o;
  struct Family {
    DivisorClass f;
    int t = -1, cok = -1;  // pinned values where known
  };
  const std::vector<Family> families = {
      {DivisorClass(0, {0, 0, 0, 0, 0, 0, 0}), 7, 0},
      {DivisorClass(4, {2, 2, 2, 1, 1, 1, 1}), 3, 2},
      {DivisorClass(7, {3, 3, 3, 3, 2, 2, 2})},
      {DivisorClass(10, {4, 4, 4, 4, 4, 3, 3})},
      {DivisorClass(13, {5, 5, 5, 5, 5, 5, 4})},
      {DivisorClass(16, {6, 6, 6, 6, 6, 6, 6})},
      {DivisorClass(5, {2, 2, 2, 2, 2, 2, 1}), 6, 3},
      {DivisorClass(8, {3, 3, 3, 3, 3, 3, 3})},
  };
  for (const auto& fam : families) {
    const auto& f = fam.f;
    const std::string name = format_class(f);
    if (!is_nef7_exception(f)) o.fail(name + " not recognised as an exception");
    const auto rep = mu_dims(f);
    const auto fast = fast_path_nef7(f);
    if (rep.ker != 0) o.fail(name + ": ker " + std::to_string(rep.ker));
    if (rep.cok != rep.lambda) o.fail(name + ": cok != lambda");
    if (f.is_zero() ? rep.t != 7 : rep.t <= rep.lambda) o.fail(name + ": t_F does not exceed lambda");
    if (fast.ker != rep.ker || fast.cok != rep.cok) o.fail(name + ": closed form disagrees");
    if (fam.t >= 0 && rep.t != fam.t) o.fail(name + ": t = " + std::to_string(rep.t));
    if (fam.cok >= 0 && rep.cok != fam.cok) o.fail(name + ": cok = " + std::to_string(rep.cok));
    const std::vector<int> m(f.mults().begin(), f.mults().end());
    const auto orc = oracle_mu(m, f.degree());
    if (!orc.consistent) o.fail(name + ": oracle trials disagree");
    if (orc.ker != rep.ker || orc.cok != rep.cok)
      o.fail(name + ": oracle (" + std::to_string(orc.ker) + "," + std::to_string(orc.cok) + ")");
  }
  o.detail = "8 families: ker = 0, cok = lambda < t (F = 0: t = 7), oracle-checked";
  return o;
}

Outcome failure_example() {
  Outcome o;
  const auto f = -canonical_class(7) + cubic_class(1);
  const auto rep = mu_dims(f);
  const auto fast = fast_path_nef7(f);
  const auto orc = oracle_mu({3, 2, 2, 2, 2, 2, 2}, 6);
  if (f != DivisorClass(6, {3, 2, 2, 2, 2, 2, 2})) o.fail("-K + C_1 is " + format_class(f));
  if (rep.ker != 1 || rep.cok != 1 || rep.t != 1)
    o.fail("reduction gives ker " + std::to_string(rep.ker) + ", cok " + std::to_string(rep.cok) +
           ", t " + std::to_string(rep.t));
  if (fast.cok != 1 || fast.ker != 1) o.fail("closed form disagrees");
  if (!max_rank_failure(f)) o.fail("failure predicate does not fire");
  if (!orc.consistent || orc.ker != 1 || orc.cok != 1) o.fail("oracle disagrees");
  o.detail = "F = 6;3,2,2,2,2,2,2: ker = 1, cok = 1 = t_F (oracle: ker " +
             std::to_string(orc.ker) + ", cok " + std::to_string(orc.cok) + ")";
  return o;
}

Outcome pencil_law() {
  Outcome o;
  const auto d = DivisorClass(1, {1});
  for (int m = 1; m <= 10; ++m) {
    const auto f = m * d;
    const int ker = mu_dims(f).ker;
    const int pk = pencil_kernel(f).ker;
    const auto orc = oracle_mu({m}, m);
    if (ker != m || pk != m)
      o.fail("m = " + std::to_string(m) + ": ker " + std::to_string(ker));
    if (!orc.consistent || orc.ker != m)
      o.fail("m = " + std::to_string(m) + ": oracle ker " + std::to_string(orc.ker));
  }
  o.detail = "F = m(L - E_1), m = 1..10: ker = m, matched by the oracle";
  return o;
}

Outcome golden_resolutions() {
  Outcome o;
  const std::vector<std::pair<std::vector<int>, std::string>> golden = {
      {{1, 1, 1, 1, 1, 1, 1}, "0 -> R(-4)+R(-5) -> 3R(-3) -> I -> 0"},
      {{2}, "0 -> 2R(-3) -> 3R(-2) -> I -> 0"},
      {{2, 2, 2, 2, 2, 2, 1}, "0 -> 4R(-7) -> 2R(-5)+3R(-6) -> I -> 0"},
  };
  for (const auto& [m, want] : golden) {
    const FatPointScheme z(m);
    const auto sym = resolve(z).display;
    const auto orc = oracle_resolve(z).summary.display;
    if (sym != want) o.fail("Z=(" + str(m) + "): " + sym);
    if (orc != want) o.fail("Z=(" + str(m) + ") oracle: " + orc);
  }
  o.detail = "7 simple points, 2p_1, 2(p_1+...+p_6)+p_7: symbolic and oracle displays exact";
  return o;
}

Outcome property_suites() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(777);
  auto random_class = [&](int r, int lo, int hi) {
    std::uniform_int_distribution<int> v(lo, hi);
    std::vector<int> m(static_cast<std::size_t>(r));
    for (auto& x : m) x = v(rng);
    return DivisorClass(v(rng), m);
  };

  int weyl = 0;
  for (int i = 0; i < 5000; ++i) {
    const int r = 3 + static_cast<int>(rng() % 6);
    const auto f = random_class(r, -4, 10);
    auto g = f;
    const int steps = 1 + static_cast<int>(rng() % 16);
    for (int s = 0; s < steps; ++s) g = apply_reflection(static_cast<int>(rng() % r), g);
    if (h0(g) != h0(f) || h1(g) != h1(f) || h2(g) != h2(f))
      o.fail("Weyl invariance: " + format_class(f) + " vs " + format_class(g));
    ++weyl;
  }

  int h1_checked = 0;
  for (int i = 0; i < 20000 && h1_checked < 5000; ++i) {
    const int r = 1 + static_cast<int>(rng() % 8);
    const auto f = random_class(r, -3, 9);
    if (!is_effective(f)) continue;
    ++h1_checked;
    const auto& ex = exceptional_curves(r);
    const bool simple = std::all_of(ex.begin(), ex.end(),
                                    [&](const auto& e) { return intersect(f, e) >= -1; });
    if ((h1(f) == 0) != simple) o.fail("h1 criterion: " + format_class(f));
  }

  int sandwich = 0;
  for (int i = 0; i < 20000 && sandwich < 3000; ++i) {
    const int r = 2 + static_cast<int>(rng() % 6);
    const auto f = random_class(r, 0, 8);
    if (f.degree() < 0 || h0(f) == 0 || h1(f) != 0) continue;
    ++sandwich;
    const auto b = kernel_bounds(f);
    const int ker = mu_dims(f).ker;
    if (b.lower > ker || ker > b.upper) o.fail("bounds sandwich: " + format_class(f));
  }

  const auto l12 = DivisorClass(1, {1, 1, 0, 0, 0, 0, 0});
  int lemma = 0, corollary = 0;
  for (const auto& f : sorted_nef_classes(7, 12)) {
    const auto rep = mu_dims(f);
    const bool fails = rep.ker > 0 && rep.cok > 0;
    ++corollary;
    if (max_rank_failure(f) != fails) o.fail("failure predicate: " + format_class(f));
    if (!f.is_zero() && intersect(f, l12) == 0) {
      ++lemma;
      if (conic_perp_failure_criterion(f) != fails) o.fail("conic criterion: " + format_class(f));
    }
  }

  const auto sw = sweep(12);
  if (sw.max_deficiency > 7) o.fail("deficiency cap: " + std::to_string(sw.max_deficiency));

  int resolved = 0;
  for (int i = 0; i < 2000; ++i) {
    const int r = static_cast<int>(rng() % 8);
    std::vector<int> m(static_cast<std::size_t>(r));
    for (auto& x : m) x = static_cast<int>(rng() % 9);
    try {
      const auto s = resolve(FatPointScheme(m));
      int sum = 0;
      for (const auto& [t, n] : s.generators) sum += n;
      for (const auto& [t, n] : s.syzygies) sum -= n;
      if (sum != 1) o.fail("rank identity: Z=(" + str(m) + ")");
      ++resolved;
    } catch (const InvariantError& e) {
      o.fail("Z=(" + str(m) + "): " + e.what());
    }
  }

  o.detail = std::to_string(weyl) + " Weyl images, " + std::to_string(h1_checked) +
             " effective classes, " + std::to_string(sandwich) + " bound checks, " +
             std::to_string(lemma) + "/" + std::to_string(corollary) +
             " nef classes for the two failure criteria, " + std::to_string(sw.rows.size()) +
             " sweep rows (max deficiency " + std::to_string(sw.max_deficiency) + "), " +
             std::to_string(resolved) + " resolutions, " + fmt_seconds(seconds_since(t0));
  return o;
}

Outcome surjectivity_regions() {
  Outcome o;
  std::mt19937_64 rng(4242);
  int ample = 0;
  while (ample < 1000) {
    const int r = static_cast<int>(rng() % 8);
    const int d = 1 + static_cast<int>(rng() % 20);
    std::vector<int> m(static_cast<std::size_t>(r));
    for (auto& x : m) x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d));
    const DivisorClass f(d, m);
    if (!is_ample(f)) continue;
    ++ample;
    if (mu_dims(f).cok != 0) o.fail("ample " + format_class(f) + " not surjective");
  }
  int nef = 0;
  for (int r = 0; r <= 5; ++r) {
    for (const auto& f : sorted_nef_classes(r, 12)) {
      ++nef;
      if (mu_dims(f).cok != 0) o.fail("nef " + format_class(f) + " not surjective");
    }
  }
  o.detail = std::to_string(ample) + " random ample classes (r <= 7, degree <= 20), " +
             std::to_string(nef) + " nef classes (r <= 5, degree <= 12): all cok = 0";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"fast path equals general path", fast_path_equality},
      {"exception families", exception_families},
      {"failure example -K + C_1", failure_example},
      {"pencil law", pencil_law},
      {"golden resolutions", golden_resolutions},
      {"property suites", property_suites},
      {"surjectivity regions", surjectivity_regions},
  };
  int failed = 0;
  int n = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", n++, name.c_str(), o.detail.c_str());
    for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed;
}
