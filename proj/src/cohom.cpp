#include "fatpoints/cohom.hpp"

#include <algorithm>

#include "fatpoints/errors.hpp"
#include "fatpoints/picard.hpp"

namespace fatpoints {

int chi(const DivisorClass& f) {
  const int twice = intersect(f, f) - intersect(canonical_class(f.r()), f);
  FATPOINTS_CHECK(twice % 2 == 0, "F^2 - K.F is odd for " + format_class(f));
  return twice / 2 + 1;
}

DivisorClass h0_reduce(const DivisorClass& f, std::span<const DivisorClass> order) {
  auto cur = f;
  bool changed = true;
  // Once F.L < 0 the class is not effective and the reduction stops.
  while (changed && cur.degree() >= 0) {
    changed = false;
    for (const auto& e : order) {
      if (intersect(cur, e) < 0) {
        cur -= e;
        changed = true;
        break;
      }
    }
  }
  return cur;
}

int h0(const DivisorClass& f, std::span<const DivisorClass> order) {
  if (f.r() > kMaxPoints) throw UnsupportedError("h0 needs r <= 8");
  auto terminal = h0_reduce(f, order);
  if (terminal.degree() < 0) return 0;
  return std::max(0, chi(terminal));
}

int h0(const DivisorClass& f) { return h0(f, exceptional_curves(f.r())); }

int h2(const DivisorClass& f) { return h0(canonical_class(f.r()) - f); }

int h1(const DivisorClass& f) {
  const int value = h0(f) + h2(f) - chi(f);
  FATPOINTS_CHECK(value >= 0, "negative h1 for " + format_class(f));
  return value;
}

bool is_nef(const DivisorClass& f) {
  if (f.degree() < 0) return false;
  if (f.r() == 0) return true;
  if (f.r() == 1) return f.degree() >= f.mult(1) && f.mult(1) >= 0;
  return std::all_of(exceptional_curves(f.r()).begin(), exceptional_curves(f.r()).end(),
                     [&](const DivisorClass& e) { return intersect(f, e) >= 0; });
}

bool is_ample(const DivisorClass& f) {
  if (f.r() >= kMaxPoints) throw UnsupportedError("ampleness is not supported for r = 8");
  if (f.r() == 0) return f.degree() > 0;
  if (f.r() == 1) return f.degree() > f.mult(1) && f.mult(1) > 0;
  if (f.degree() <= 0 || intersect(f, f) <= 0) return false;
  return std::all_of(exceptional_curves(f.r()).begin(), exceptional_curves(f.r()).end(),
                     [&](const DivisorClass& e) { return intersect(f, e) > 0; });
}

bool is_effective(const DivisorClass& f) { return h0(f) > 0; }

FixedComponents strip_fixed_components(const DivisorClass& f, std::span<const DivisorClass> order) {
  const int sections = h0(f);
  if (sections == 0)
    throw PreconditionError("strip_fixed_components needs an effective class, got " +
                            format_class(f));
  FixedComponents out{f, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : order) {
      if (h0(out.free - e) == sections) {
        out.free -= e;
        out.fixed.push_back(e);
        changed = true;
        break;
      }
    }
  }
  return out;
}

FixedComponents strip_fixed_components(const DivisorClass& f) {
  return strip_fixed_components(f, exceptional_curves(f.r()));
}

CohomologySummary summarize(const DivisorClass& f) {
  CohomologySummary s;
  s.h0 = h0(f);
  s.h2 = h2(f);
  s.chi = chi(f);
  s.h1 = s.h0 + s.h2 - s.chi;
  FATPOINTS_CHECK(s.h1 >= 0, "negative h1 for " + format_class(f));
  s.effective = s.h0 > 0;
  s.nef = is_nef(f);
  s.ample_defined = f.r() < kMaxPoints;
  s.ample = s.ample_defined && is_ample(f);
  return s;
}

}  // namespace fatpoints
