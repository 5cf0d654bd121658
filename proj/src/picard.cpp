#include "fatpoints/picard.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "fatpoints/errors.hpp"

namespace fatpoints {

int intersect(const DivisorClass& a, const DivisorClass& b) {
  if (a.r() != b.r())
    throw ArgumentError("cannot intersect classes with r = " + std::to_string(a.r()) + " and r = " +
                        std::to_string(b.r()));
  int product = a.degree() * b.degree();
  auto ma = a.mults(), mb = b.mults();
  for (std::size_t i = 0; i < ma.size(); ++i) product -= ma[i] * mb[i];
  return product;
}

DivisorClass canonical_class(int r) {
  if (r < 0 || r > kMaxPoints) throw ArgumentError("r must lie in [0, 8]");
  return DivisorClass(-3, std::vector<int>(static_cast<std::size_t>(r), -1));
}

DivisorClass apply_reflection(int i, const DivisorClass& x) {
  const int r = x.r();
  std::vector<int> m(x.mults().begin(), x.mults().end());
  if (i == 0) {
    if (r < 3) throw ArgumentError("s_0 needs at least three points");
    // x + (x.c) c with c = L - E_1 - E_2 - E_3
    const int k = x.degree() - m[0] - m[1] - m[2];
    for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(j)] += k;
    return DivisorClass(x.degree() + k, std::move(m));
  }
  if (i < 0 || i >= r)
    throw ArgumentError("reflection s_" + std::to_string(i) + " does not exist for r = " +
                        std::to_string(r));
  std::swap(m[static_cast<std::size_t>(i - 1)], m[static_cast<std::size_t>(i)]);
  return DivisorClass(x.degree(), std::move(m));
}

const char* to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::NegativeDegree: return "i";
    case ReductionCase::NegativeMultiplicity: return "ii";
    case ReductionCase::Chamber: return "iii";
  }
  return "?";
}

int ReductionTrace::reflections() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const ReductionStep& s) {
    return std::holds_alternative<ReflectionStep>(s);
  }));
}

namespace {

// Stable nonincreasing sort. Returns the 1-based source index of each slot.
std::vector<int> sort_mults(DivisorClass& f) {
  std::vector<int> perm(static_cast<std::size_t>(f.r()));
  std::iota(perm.begin(), perm.end(), 1);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return f.mult(a) > f.mult(b); });
  std::vector<int> m;
  m.reserve(perm.size());
  for (int p : perm) m.push_back(f.mult(p));
  f = DivisorClass(f.degree(), std::move(m));
  return perm;
}

bool is_identity(const std::vector<int>& perm) {
  for (std::size_t k = 0; k < perm.size(); ++k)
    if (perm[k] != static_cast<int>(k) + 1) return false;
  return true;
}

}  // namespace

ReductionResult weyl_reduce(const DivisorClass& f) {
  ReductionResult out{f, ReductionCase::Chamber, {}};
  auto& cur = out.reduced;
  auto& steps = out.trace.steps;
  const int r = f.r();
  auto finish = [&](ReductionCase c) {
    out.which = c;
    steps.push_back(TerminalStep{c});
    return out;
  };
  while (true) {
    auto perm = sort_mults(cur);
    if (!is_identity(perm)) steps.push_back(SortStep{std::move(perm)});
    auto m = cur.mults();
    if (cur.degree() < 0) return finish(ReductionCase::NegativeDegree);
    if (r > 0 && m.back() < 0) return finish(ReductionCase::NegativeMultiplicity);
    if (r >= 3) {
      if (cur.degree() >= m[0] + m[1] + m[2]) return finish(ReductionCase::Chamber);
      cur = apply_reflection(0, cur);
      steps.push_back(ReflectionStep{0});
      continue;
    }
    // Without s_0: the line through both points (r = 2) or the ruling L - E_1
    // (r = 1) is met negatively, so the class is not in the chamber.
    if (r == 2 && cur.degree() < m[0] + m[1]) return finish(ReductionCase::NegativeMultiplicity);
    if (r == 1 && cur.degree() < m[0]) return finish(ReductionCase::NegativeDegree);
    return finish(ReductionCase::Chamber);
  }
}

std::vector<DivisorClass> reflection_orbit(const std::vector<DivisorClass>& seeds) {
  std::set<DivisorClass, ClassLess> seen(seeds.begin(), seeds.end());
  std::vector<DivisorClass> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<DivisorClass> next;
    for (const auto& x : frontier) {
      const int first = x.r() >= 3 ? 0 : 1;
      for (int i = first; i < x.r(); ++i) {
        auto y = apply_reflection(i, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<DivisorClass> permutations_of(const DivisorClass& f) {
  std::vector<int> m(f.mults().begin(), f.mults().end());
  std::sort(m.begin(), m.end());
  std::vector<DivisorClass> out;
  do {
    out.emplace_back(f.degree(), m);
  } while (std::next_permutation(m.begin(), m.end()));
  std::sort(out.begin(), out.end(), ClassLess{});
  return out;
}

namespace {

// Orbit representatives below eight points, by degree.
std::vector<DivisorClass> enumerate_exceptionals(int r) {
  if (r == kMaxPoints) return reflection_orbit({DivisorClass::exceptional(r, r)});
  std::vector<DivisorClass> out;
  auto add_family = [&](int degree, int twos, int ones) {
    if (twos + ones > r) return;
    std::vector<int> m(static_cast<std::size_t>(r), 0);
    std::fill_n(m.begin(), twos, 2);
    std::fill_n(m.begin() + twos, ones, 1);
    for (auto& c : permutations_of(DivisorClass(degree, m))) out.push_back(std::move(c));
  };
  if (r >= 1) {
    for (int i = 1; i <= r; ++i) out.push_back(DivisorClass::exceptional(r, i));
  }
  add_family(1, 0, 2);
  add_family(2, 0, 5);
  if (r == 7) add_family(3, 1, 6);
  std::sort(out.begin(), out.end(), ClassLess{});
  return out;
}

const std::array<std::array<int, 8>, 20> kNefGeneratorTable = {{
    {1, 0, 0, 0, 0, 0, 0, 0}, {2, 1, 1, 1, 0, 0, 0, 0}, {3, 2, 1, 1, 1, 1, 0, 0},
    {4, 2, 2, 2, 1, 1, 1, 0}, {4, 3, 1, 1, 1, 1, 1, 1}, {5, 3, 2, 2, 2, 1, 1, 1},
    {5, 2, 2, 2, 2, 2, 2, 0}, {6, 3, 3, 2, 2, 2, 2, 1}, {7, 3, 3, 3, 3, 2, 2, 2},
    {8, 3, 3, 3, 3, 3, 3, 3}, {1, 1, 0, 0, 0, 0, 0, 0}, {2, 1, 1, 1, 1, 0, 0, 0},
    {3, 2, 1, 1, 1, 1, 1, 0}, {4, 2, 2, 2, 1, 1, 1, 1}, {5, 2, 2, 2, 2, 2, 2, 1},
    {3, 1, 1, 1, 1, 1, 1, 0}, {4, 2, 2, 1, 1, 1, 1, 1}, {5, 2, 2, 2, 2, 2, 1, 1},
    {6, 3, 2, 2, 2, 2, 2, 2}, {3, 1, 1, 1, 1, 1, 1, 1},
}};

SurfaceModel build_model(int r) {
  SurfaceModel s;
  s.r = r;
  s.canonical = canonical_class(r);
  s.exceptionals = enumerate_exceptionals(r);
  if (r == 7) {
    for (int i = 1; i <= 7; ++i) s.cubics.push_back(cubic_class(i));
    std::set<DivisorClass, ClassLess> all;
    for (const auto& row : kNefGeneratorTable) {
      DivisorClass g(row[0], std::vector<int>(row.begin() + 1, row.end()));
      s.nef_generator_bases.push_back(g);
      for (auto& p : permutations_of(g)) all.insert(std::move(p));
    }
    s.nef_generators.assign(all.begin(), all.end());
  }
  return s;
}

}  // namespace

DivisorClass cubic_class(int i) {
  if (i < 1 || i > 7) throw ArgumentError("cubic exceptional index must lie in [1, 7]");
  std::vector<int> m(7, 1);
  m[static_cast<std::size_t>(i - 1)] = 2;
  return DivisorClass(3, std::move(m));
}

const SurfaceModel& surface_model(int r) {
  if (r < 0 || r > kMaxPoints) throw UnsupportedError("r must lie in [0, 8]");
  static const auto models = [] {
    std::array<SurfaceModel, kMaxPoints + 1> all;
    for (int k = 0; k <= kMaxPoints; ++k) all[static_cast<std::size_t>(k)] = build_model(k);
    return all;
  }();
  return models[static_cast<std::size_t>(r)];
}

const std::vector<DivisorClass>& exceptional_curves(int r) { return surface_model(r).exceptionals; }

}  // namespace fatpoints
