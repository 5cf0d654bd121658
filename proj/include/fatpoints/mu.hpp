#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/divisor_class.hpp"

namespace fatpoints {

enum class MuStepKind {
  FixedComponent,  // a fixed exceptional curve was removed
  Subtract,        // F <- F - E for a perpendicular E with E.L >= 2
  Contract,        // E_i perpendicular to F was blown down
  FewSections,     // terminal: h0 <= 1, injective
  ConicPerp,       // terminal: F.(L - E_i - E_j) = 0, kernel in closed form
  Pencil,          // terminal: F^2 = 0, F = mD
  Ample,           // terminal: surjective, kernel from the Euler count
};

const char* to_string(MuStepKind k);

struct MuStep {
  MuStepKind kind;
  /// The curve removed or contracted; for ConicPerp the line class; unused otherwise.
  std::optional<DivisorClass> curve;
  /// 1-based point index for Contract.
  int index = 0;
  /// The running class after the step.
  DivisorClass after;
  /// Kernel dimension, terminal steps only.
  int ker = 0;
};

/// Kernel and cokernel of mu_F : H0(F) (x) H0(L) -> H0(F + L).
struct MuReport {
  int ker = 0;
  int cok = 0;
  int lambda_prime = 0;
  int lambda = 0;
  /// Cubic exceptionals perpendicular to F; zero unless r = 7.
  int t = 0;
  bool maximal_rank = true;
  std::vector<MuStep> trace;
};

struct MuOptions {
  /// When set, choices among eligible perpendicular exceptionals and the
  /// fixed-component scan order are randomized with this seed.
  std::optional<std::uint64_t> shuffle_seed;
};

/// The general reduction: strips fixed parts, peels off or contracts
/// perpendicular exceptionals until a closed-form terminal case. r <= 7.
MuReport mu_dims(const DivisorClass& f, const MuOptions& options = {});

/// h0(F + L) - 3 h0(F).
int lambda_prime(const DivisorClass& f);
/// #{ i : C_i.F = 0 } at r = 7.
int cubic_perp_count(const DivisorClass& f);

struct PencilData {
  DivisorClass generator;
  int multiplicity = 0;
};

struct PencilKernel {
  PencilData pencil;
  int ker = 0;
};

/// F = mD with D^2 = 0, -K.D = 2; kernel m when D.L = 1, else 0.
PencilKernel pencil_kernel(const DivisorClass& f);

struct KerCok {
  int ker = 0;
  int cok = 0;
  friend bool operator==(const KerCok&, const KerCok&) = default;
};

/// Closed form when F is nef and F.(L - E_i - E_j) = 0 (i, j 1-based, distinct).
KerCok conic_perp_dims(const DivisorClass& f, int i, int j);

/// Closed form for nef F at r = 7: cok = max(t_F, lambda_F) outside the
/// eight exception families, where mu_F is injective instead.
MuReport fast_path_nef7(const DivisorClass& f);

/// True when the sorted multiplicities of F put it in one of the exception
/// families of the r = 7 closed form.
bool is_nef7_exception(const DivisorClass& f);

/// Predicts failure of maximal rank for nef F at r = 7 from D, the sum of the
/// cubic exceptionals perpendicular to F: t_F > 0, F - D nef, lambda'_{F-D} < 0.
bool max_rank_failure(const DivisorClass& f);

/// For nef F != 0 at r = 7 with sorted multiplicities and F.(L-E_1-E_2) = 0:
/// maximal rank fails iff h0(F - (L-E_1)) > 0 and h1(F - (L-E_2)) > 0.
bool conic_perp_failure_criterion(const DivisorClass& f);

struct KernelBounds {
  int lower = 0;
  int upper = 0;
};

/// Diagnostic bounds on dim ker mu_F for effective F with h1(F) = 0, r >= 2.
/// Multiplicities are sorted internally.
KernelBounds kernel_bounds(const DivisorClass& f);

/// Every nef class on the blow-up at r points with nonincreasing
/// multiplicities and degree <= max_degree. Degree ascending, then
/// multiplicity vectors in decreasing lexicographic order.
std::vector<DivisorClass> sorted_nef_classes(int r, int max_degree);

/// One line per step.
std::string render_trace(const std::vector<MuStep>& trace);

}  // namespace fatpoints
