#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fatpoints/resolution.hpp"

namespace fatpoints {

struct OracleConfig {
  std::uint64_t prime = 1'000'003;
  std::uint64_t seed = 1;
  int trials = 3;
  /// Highest degree the oracle may work in; 0 picks sum(m_i) + 4.
  int max_degree = 0;
};

/// Throws ConfigError unless the modulus is a prime below 2^31 that exceeds
/// both the working degree and twice the largest multiplicity.
void validate(const OracleConfig& cfg, int max_multiplicity, int working_degree);

using Point = std::array<std::uint64_t, 3>;

struct PointSet {
  std::uint64_t prime = 0;
  std::vector<Point> points;
};

/// Uniformly random, pairwise projectively distinct points of P^2(F_p),
/// determined by (cfg.seed, trial).
PointSet sample_points(int r, const OracleConfig& cfg, int trial = 0);

/// Monomials x^a y^b z^c with a + b + c = t, a descending then b descending.
std::vector<std::array<int, 3>> monomials(int t);

/// Degree-t forms vanishing to order m_i at point i. Rows are coefficient
/// vectors over monomials(t).
std::vector<std::vector<std::uint64_t>> ideal_basis(const PointSet& pts,
                                                     const std::vector<int>& mults, int t);
int ideal_basis_dim(const PointSet& pts, const std::vector<int>& mults, int t);

/// Rank of I(Z)_t (x) <x, y, z> -> I(Z)_{t+1}.
int mu_rank(const PointSet& pts, const std::vector<int>& mults, int t);

/// Whether the degree-t part of I(Z) has a common factor, tested by
/// restricting two random members to a random line. Needs dim I(Z)_t >= 1.
bool has_common_factor(const PointSet& pts, const std::vector<int>& mults, int t,
                       std::uint64_t seed);

/// Rank of a matrix over F_p (rows are consumed).
int rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p);

struct TrialTables {
  std::vector<int> hilbert;     // index t
  std::vector<int> mu_ranks;    // index t: rank of mu in degree t
  std::vector<int> generators;  // index t
  int alpha = 0;
  int beta = 0;
};

struct OracleReport {
  ResolutionSummary summary;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<TrialTables> per_trial;
  /// Human-readable notes for every trial value that differs from the reported one.
  std::vector<std::string> disagreements;
};

/// Brute-force resolution data from random point sets: per degree, the
/// minimum over trials. r <= 8 for the Hilbert function, r <= 7 otherwise
/// (the tables are computed the same way; r = 8 is accepted).
OracleReport oracle_resolve(const FatPointScheme& z, const OracleConfig& cfg = {});

}  // namespace fatpoints
