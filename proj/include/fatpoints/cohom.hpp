#pragma once

#include <span>
#include <vector>

#include "fatpoints/divisor_class.hpp"

namespace fatpoints {

/// Riemann-Roch: (F.F - K.F)/2 + 1.
int chi(const DivisorClass& f);

/// The class left by the h0 reduction: exceptional curves met negatively are
/// subtracted (in `order`) until none remain or the degree turns negative.
/// h0 is unchanged along the way.
DivisorClass h0_reduce(const DivisorClass& f, std::span<const DivisorClass> order);

/// Dimension of H^0(X, O_X(F)) for r <= 8 general points.
int h0(const DivisorClass& f);
/// Same value, subtracting curves in the given order instead of the
/// enumeration order. The order must be a permutation of exceptional_curves(r).
int h0(const DivisorClass& f, std::span<const DivisorClass> order);

/// h0(K - F), by duality.
int h2(const DivisorClass& f);
/// h0 + h2 - chi.
int h1(const DivisorClass& f);

bool is_nef(const DivisorClass& f);
/// Not defined for r = 8.
bool is_ample(const DivisorClass& f);
bool is_effective(const DivisorClass& f);

struct FixedComponents {
  DivisorClass free;
  std::vector<DivisorClass> fixed;
};

/// Splits off exceptional curves E with h0(F - E) == h0(F), repeatedly,
/// scanning in enumeration order. Requires h0(F) > 0.
FixedComponents strip_fixed_components(const DivisorClass& f);
FixedComponents strip_fixed_components(const DivisorClass& f, std::span<const DivisorClass> order);

struct CohomologySummary {
  int h0 = 0, h1 = 0, h2 = 0;
  int chi = 0;
  bool effective = false, nef = false;
  /// Unset for r = 8.
  bool ample = false;
  bool ample_defined = true;
};

CohomologySummary summarize(const DivisorClass& f);

}  // namespace fatpoints
