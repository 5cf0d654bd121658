#pragma once

#include <map>
#include <string>
#include <vector>

#include "fatpoints/divisor_class.hpp"

namespace fatpoints {

/// Z = m_1 p_1 + ... + m_r p_r for general points p_i.
class FatPointScheme {
 public:
  FatPointScheme() = default;
  explicit FatPointScheme(std::vector<int> mults);

  int r() const { return static_cast<int>(mults_.size()); }
  const std::vector<int>& mults() const { return mults_; }
  bool is_zero() const;
  int total_multiplicity() const;
  /// Length of Z: sum of m_i (m_i + 1) / 2.
  int length() const;

 private:
  std::vector<int> mults_;
};

using DegreeTable = std::map<int, int>;

/// F_t = tL - m_1 E_1 - ... - m_r E_r.
DivisorClass degree_class(const FatPointScheme& z, int t);

/// dim I(Z)_t.
int hilbert_function(const FatPointScheme& z, int t);

/// Least t with I(Z)_t != 0. Zero for the zero scheme.
int alpha(const FatPointScheme& z);
/// Least t >= alpha where |F_t| has no fixed components. Zero for the zero scheme.
int beta(const FatPointScheme& z);

/// (t + 2 choose 2) for t >= 0, else 0.
int forms_of_degree(int t);

/// t -> number of minimal generators of degree t (nonzero entries only).
DegreeTable generator_degrees(const FatPointScheme& z);
/// t -> number of minimal first syzygies of degree t (nonzero entries only).
DegreeTable syzygy_degrees(const FatPointScheme& z);

/// Solves the Hilbert bookkeeping of 0 -> F_1 -> F_0 -> I -> 0 for F_1 given
/// F_0 and the Hilbert function on [0, last]. Throws InvariantError if some
/// syzygy count would be negative.
DegreeTable syzygies_from_hilbert(const DegreeTable& generators, const DegreeTable& hilbert,
                                  int last);

/// "0 -> R(-4)+R(-5) -> 3R(-3) -> I -> 0".
std::string render_resolution(const DegreeTable& generators, const DegreeTable& syzygies);

struct ResolutionSummary {
  int r = 0;
  std::vector<int> mults;
  int alpha = 0;
  int beta = 0;
  /// The zero scheme: I(Z) is the unit ideal.
  bool degenerate = false;
  /// dim I(Z)_t for 0 <= t <= last computed degree.
  DegreeTable hilbert;
  DegreeTable generators;
  DegreeTable syzygies;
  std::string display;
};

/// Full symbolic pipeline, r <= 7. Verifies the rank and Hilbert identities
/// and that nothing is generated past beta + 2.
ResolutionSummary resolve(const FatPointScheme& z);

}  // namespace fatpoints
