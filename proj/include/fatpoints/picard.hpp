#pragma once

#include <variant>
#include <vector>

#include "fatpoints/divisor_class.hpp"

namespace fatpoints {

/// Intersection form on Cl(X): L.L = 1, E_i.E_i = -1, mixed products 0.
int intersect(const DivisorClass& a, const DivisorClass& b);

/// K_X = -3L + E_1 + ... + E_r.
DivisorClass canonical_class(int r);

/// s_0 is the Cremona reflection in L - E_1 - E_2 - E_3 (needs r >= 3);
/// s_i for 1 <= i < r transposes m_i and m_{i+1}.
DivisorClass apply_reflection(int i, const DivisorClass& x);

/// Terminal states of the Cremona reduction.
enum class ReductionCase {
  NegativeDegree,        // (i)   w(F).L < 0
  NegativeMultiplicity,  // (ii)  w(F).E_i < 0 for some i
  Chamber,               // (iii) w(F) is a nonnegative sum of the chamber generators
};

const char* to_string(ReductionCase c);

struct ReflectionStep {
  int index;
  friend bool operator==(const ReflectionStep&, const ReflectionStep&) = default;
};
/// permutation[k] is the 1-based source index of the k-th sorted multiplicity.
struct SortStep {
  std::vector<int> permutation;
  friend bool operator==(const SortStep&, const SortStep&) = default;
};
struct TerminalStep {
  ReductionCase which;
  friend bool operator==(const TerminalStep&, const TerminalStep&) = default;
};
using ReductionStep = std::variant<ReflectionStep, SortStep, TerminalStep>;

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  /// Number of s_0 applications.
  int reflections() const;
};

struct ReductionResult {
  DivisorClass reduced;
  ReductionCase which;
  ReductionTrace trace;
};

/// Sorts, then applies s_0 while d < m_1 + m_2 + m_3, until one of the three
/// terminal cases holds. Total. Below three points the chamber test uses the
/// degenerate effective-cone generators instead of s_0.
ReductionResult weyl_reduce(const DivisorClass& f);

/// All exceptional-curve classes for 0 <= r <= 8, in the order of compare().
const std::vector<DivisorClass>& exceptional_curves(int r);

/// Closes a set of classes under s_0, ..., s_{r-1}. Result sorted by compare().
std::vector<DivisorClass> reflection_orbit(const std::vector<DivisorClass>& seeds);

/// Distinct permutations of a class's multiplicities, in compare() order.
std::vector<DivisorClass> permutations_of(const DivisorClass& f);

struct SurfaceModel {
  int r = 0;
  DivisorClass canonical;
  std::vector<DivisorClass> exceptionals;
  /// r = 7 only: C_i = 3L - E_1 - ... - E_7 - E_i, i = 1..7.
  std::vector<DivisorClass> cubics;
  /// r = 7 only: G_1..G_20 (as listed) in their base orientation.
  std::vector<DivisorClass> nef_generator_bases;
  /// r = 7 only: every permutation of every G_j.
  std::vector<DivisorClass> nef_generators;
};

const SurfaceModel& surface_model(int r);

/// The cubic exceptional class C_i at r = 7 (1-based).
DivisorClass cubic_class(int i);

}  // namespace fatpoints
