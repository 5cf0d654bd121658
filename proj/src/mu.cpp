#include "fatpoints/mu.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "fatpoints/cohom.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/picard.hpp"

namespace fatpoints {

const char* to_string(MuStepKind k) {
  switch (k) {
    case MuStepKind::FixedComponent: return "fixed-component";
    case MuStepKind::Subtract: return "subtract";
    case MuStepKind::Contract: return "contract";
    case MuStepKind::FewSections: return "few-sections";
    case MuStepKind::ConicPerp: return "conic-perp";
    case MuStepKind::Pencil: return "pencil";
    case MuStepKind::Ample: return "ample";
  }
  return "?";
}

int lambda_prime(const DivisorClass& f) {
  return h0(f + DivisorClass::line(f.r())) - 3 * h0(f);
}

int cubic_perp_count(const DivisorClass& f) {
  if (f.r() != 7) throw PreconditionError("t_F is defined on the blow-up at 7 points");
  const auto& cubics = surface_model(7).cubics;
  return static_cast<int>(std::count_if(cubics.begin(), cubics.end(),
                                        [&](const DivisorClass& c) { return intersect(c, f) == 0; }));
}

namespace {

DivisorClass line_minus_point(int r, int i) {
  return DivisorClass::line(r) - DivisorClass::exceptional(r, i);
}

// The two point indices of a line class L - E_i - E_j.
std::pair<int, int> line_points(const DivisorClass& e) {
  std::vector<int> idx;
  for (int k = 1; k <= e.r(); ++k)
    if (e.mult(k) == 1) idx.push_back(k);
  FATPOINTS_CHECK(e.degree() == 1 && idx.size() == 2, "not a line class: " + format_class(e));
  return {idx[0], idx[1]};
}

int contracted_point(const DivisorClass& e) {
  for (int k = 1; k <= e.r(); ++k)
    if (e.mult(k) == -1) return k;
  throw InvariantError("not a point class: " + format_class(e));
}

// Picks the perpendicular exceptional to act on. Deterministically: E.L >= 2
// first, then E.L = 0, then E.L = 1, each in enumeration order.
std::optional<DivisorClass> choose_perpendicular(const DivisorClass& f, std::mt19937_64* rng) {
  std::vector<DivisorClass> eligible;
  for (const auto& e : exceptional_curves(f.r()))
    if (intersect(f, e) == 0) eligible.push_back(e);
  if (eligible.empty()) return std::nullopt;
  if (rng) {
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    return eligible[pick(*rng)];
  }
  for (int wanted : {2, 0, 1}) {
    for (const auto& e : eligible) {
      const int dl = e.degree();
      if ((wanted == 2 && dl >= 2) || dl == wanted) return e;
    }
  }
  throw InvariantError("unreachable: perpendicular exceptional with no category");
}

}  // namespace

MuReport mu_dims(const DivisorClass& f, const MuOptions& options) {
  if (f.r() > 7)
    throw UnsupportedError(
        "mu is only computed for r <= 7: ample classes need not give a surjective "
        "multiplication map beyond seven general points");

  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  MuReport report;
  auto& trace = report.trace;
  auto cur = f;
  int ker = -1;

  while (ker < 0) {
    // few sections: injective
    const int sections = h0(cur);
    if (sections <= 1) {
      ker = 0;
      trace.push_back({MuStepKind::FewSections, std::nullopt, 0, cur, 0});
      break;
    }
    // remove fixed curves
    std::vector<DivisorClass> order = exceptional_curves(cur.r());
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    auto fc = strip_fixed_components(cur, order);
    for (const auto& c : fc.fixed) {
      cur -= c;
      trace.push_back({MuStepKind::FixedComponent, c, 0, cur, 0});
    }
    FATPOINTS_CHECK(is_nef(cur), "fixed-component free class is not nef: " + format_class(cur));

    // perpendicular exceptionals, else a closed-form terminal case
    bool restart = false;
    while (!restart && ker < 0) {
      auto chosen = choose_perpendicular(cur, rng ? &*rng : nullptr);
      if (chosen) {
        const auto& e = *chosen;
        if (e.degree() >= 2) {
          cur -= e;
          FATPOINTS_CHECK(h0(cur) == sections - 1,
                          "h0 did not drop by one after removing " + format_class(e));
          trace.push_back({MuStepKind::Subtract, e, 0, cur, 0});
          restart = true;
        } else if (e.degree() == 0) {
          const int i = contracted_point(e);
          cur = cur.drop_point(i);
          trace.push_back({MuStepKind::Contract, e, i, cur, 0});
        } else {
          auto [i, j] = line_points(e);
          ker = conic_perp_dims(cur, i, j).ker;
          trace.push_back({MuStepKind::ConicPerp, e, 0, cur, ker});
        }
        continue;
      }
      const int self = intersect(cur, cur);
      FATPOINTS_CHECK(self >= 0, "nef class with negative self-intersection");
      if (self == 0) {
        ker = pencil_kernel(cur).ker;
        trace.push_back({MuStepKind::Pencil, std::nullopt, 0, cur, ker});
      } else {
        FATPOINTS_CHECK(is_ample(cur), "expected an ample class: " + format_class(cur));
        ker = -lambda_prime(cur);
        FATPOINTS_CHECK(ker > 0, "ample class with trivial kernel: " + format_class(cur));
        trace.push_back({MuStepKind::Ample, std::nullopt, 0, cur, ker});
      }
    }
  }

  report.ker = ker;
  report.lambda_prime = lambda_prime(f);
  report.lambda = std::max(0, report.lambda_prime);
  report.cok = report.lambda_prime + ker;
  FATPOINTS_CHECK(report.cok >= 0, "negative cokernel dimension for " + format_class(f));
  report.t = f.r() == 7 ? cubic_perp_count(f) : 0;
  report.maximal_rank = report.ker == 0 || report.cok == 0;
  return report;
}

PencilKernel pencil_kernel(const DivisorClass& f) {
  if (f.is_zero() || !is_nef(f) || intersect(f, f) != 0)
    throw PreconditionError("pencil_kernel needs a nonzero nef class with F^2 = 0, got " +
                            format_class(f));
  const int anti = -intersect(canonical_class(f.r()), f);
  FATPOINTS_CHECK(anti > 0 && anti % 2 == 0, "-K.F is not a positive even number");
  const int m = anti / 2;
  FATPOINTS_CHECK(f.degree() % m == 0, "pencil class is not divisible by its multiplicity");
  std::vector<int> dm;
  for (int x : f.mults()) {
    FATPOINTS_CHECK(x % m == 0, "pencil class is not divisible by its multiplicity");
    dm.push_back(x / m);
  }
  DivisorClass d(f.degree() / m, std::move(dm));
  FATPOINTS_CHECK(intersect(d, d) == 0 && -intersect(canonical_class(d.r()), d) == 2,
                  "pencil generator is not a conic bundle class");
  const int ker = d.degree() == 1 ? m : 0;
  return {{d, m}, ker};
}

KerCok conic_perp_dims(const DivisorClass& f, int i, int j) {
  const int r = f.r();
  if (i == j || i < 1 || j < 1 || i > r || j > r)
    throw PreconditionError("conic_perp_dims needs two distinct point indices");
  if (!is_nef(f)) throw PreconditionError("conic_perp_dims needs a nef class");
  if (f.degree() - f.mult(i) - f.mult(j) != 0)
    throw PreconditionError("F must be perpendicular to L - E_i - E_j");
  if (f.mult(i) < f.mult(j)) std::swap(i, j);
  const auto a = f - line_minus_point(r, i);
  const auto b = f - line_minus_point(r, j);
  return {h0(a) + h0(b), h1(a) + h1(b)};
}

bool is_nef7_exception(const DivisorClass& f) {
  if (f.r() != 7) return false;
  static const std::array<DivisorClass, 8> families = {
      DivisorClass(0, {0, 0, 0, 0, 0, 0, 0}),  DivisorClass(4, {2, 2, 2, 1, 1, 1, 1}),
      DivisorClass(7, {3, 3, 3, 3, 2, 2, 2}),  DivisorClass(10, {4, 4, 4, 4, 4, 3, 3}),
      DivisorClass(13, {5, 5, 5, 5, 5, 5, 4}), DivisorClass(16, {6, 6, 6, 6, 6, 6, 6}),
      DivisorClass(5, {2, 2, 2, 2, 2, 2, 1}),  DivisorClass(8, {3, 3, 3, 3, 3, 3, 3}),
  };
  const auto s = f.sorted();
  return std::find(families.begin(), families.end(), s) != families.end();
}

MuReport fast_path_nef7(const DivisorClass& f) {
  if (f.r() != 7) throw PreconditionError("fast_path_nef7 needs r = 7");
  if (!is_nef(f)) throw PreconditionError("fast_path_nef7 needs a nef class: " + format_class(f));
  MuReport report;
  report.t = cubic_perp_count(f);
  report.lambda_prime = lambda_prime(f);
  report.lambda = std::max(0, report.lambda_prime);
  if (is_nef7_exception(f)) {
    FATPOINTS_CHECK(report.lambda_prime >= 0, "exception family with negative lambda'");
    report.ker = 0;
    report.cok = report.lambda;
  } else {
    report.cok = std::max(report.t, report.lambda);
    report.ker = report.cok - report.lambda_prime;
  }
  report.maximal_rank = report.ker == 0 || report.cok == 0;
  return report;
}

bool max_rank_failure(const DivisorClass& f) {
  if (f.r() != 7) throw PreconditionError("max_rank_failure needs r = 7");
  if (!is_nef(f)) throw PreconditionError("max_rank_failure needs a nef class");
  auto d = DivisorClass::zero(7);
  int t = 0;
  for (const auto& c : surface_model(7).cubics) {
    if (intersect(c, f) == 0) {
      d += c;
      ++t;
    }
  }
  if (t == 0) return false;
  const auto rest = f - d;
  return is_nef(rest) && lambda_prime(rest) < 0;
}

bool conic_perp_failure_criterion(const DivisorClass& f) {
  if (f.r() != 7 || f.is_zero() || !is_nef(f))
    throw PreconditionError("criterion needs a nonzero nef class at r = 7");
  if (f.sorted() != f) throw PreconditionError("criterion needs sorted multiplicities");
  if (f.degree() != f.mult(1) + f.mult(2))
    throw PreconditionError("criterion needs F.(L - E_1 - E_2) = 0");
  return h0(f - line_minus_point(7, 1)) > 0 && h1(f - line_minus_point(7, 2)) > 0;
}

KernelBounds kernel_bounds(const DivisorClass& input) {
  if (input.r() < 2) throw PreconditionError("kernel_bounds needs r >= 2");
  const auto f = input.sorted();
  const int h = h0(f);
  if (h == 0) throw PreconditionError("kernel_bounds needs an effective class");
  if (h1(f) != 0) throw PreconditionError("kernel_bounds needs h1(F) = 0");
  const int r = f.r();
  const int d = f.degree();
  const int l1 = h0(f - line_minus_point(r, 1));
  const int l2 = h0(f - line_minus_point(r, 2));
  const int q1 = h0(f - DivisorClass::exceptional(r, 1));
  const auto widened = f + DivisorClass::line(r) - DivisorClass::exceptional(r, 1) -
                       DivisorClass::exceptional(r, 2);
  KernelBounds b;
  b.lower = std::max({0, 2 * h - d - 2, l1 + l2});
  b.upper = std::min(l1 + q1, l1 + l2 + h0(widened) - h);
  return b;
}

std::vector<DivisorClass> sorted_nef_classes(int r, int max_degree) {
  if (r < 0 || r > kMaxPoints) throw UnsupportedError("r must lie in [0, 8]");
  std::vector<DivisorClass> out;
  std::vector<int> m(static_cast<std::size_t>(r), 0);
  for (int d = 0; d <= max_degree; ++d) {
    // m_1 >= ... >= m_r >= 0 with m_1 + m_2 <= d (necessary for nef when r >= 2).
    auto rec = [&](auto&& self, int pos, int cap) -> void {
      if (pos == r) {
        DivisorClass f(d, m);
        if (is_nef(f)) out.push_back(std::move(f));
        return;
      }
      for (int v = cap; v >= 0; --v) {
        if (pos == 1 && m[0] + v > d) continue;
        m[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, v);
      }
    };
    rec(rec, 0, d);
  }
  return out;
}

std::string render_trace(const std::vector<MuStep>& trace) {
  std::ostringstream os;
  int n = 1;
  for (const auto& s : trace) {
    os << n++ << ". " << to_string(s.kind);
    if (s.curve) os << ' ' << format_class(*s.curve);
    if (s.kind == MuStepKind::Contract) os << " (point " << s.index << ')';
    os << " -> " << format_class(s.after);
    switch (s.kind) {
      case MuStepKind::FewSections:
      case MuStepKind::ConicPerp:
      case MuStepKind::Pencil:
      case MuStepKind::Ample: os << "  ker = " << s.ker; break;
      default: break;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace fatpoints
