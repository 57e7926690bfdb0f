#pragma once

// Solutions of the character system  alpha_p alpha_q = sum_r N^r_{p,q} alpha_r.
//
// For a finite group every solution is a column of the character table.
// Writing (M_p)_{r,q} = N^r_{p,q}, a solution is a common eigenvector of the
// transposed fusion matrices normalized to alpha_unit = 1, with eigenvalue
// alpha_p under M_p^T.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "fusionscope/fusion_ring.hpp"

namespace fusionscope {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using CharacterVector = std::vector<std::complex<double>>;

struct FusionMatrixSet {
  std::vector<IntMatrix> matrices;
  /// Clipped matrices of truncated rings need not commute, so the
  /// commutation check only runs on complete rings.
  bool commutation_checked = false;
};

/// (M_p)_{r,q} = N^r_{p,q}.  Throws InternalConsistency if M_unit is not
/// the identity or two matrices fail to commute (complete rings only).
FusionMatrixSet fusion_matrices(const FusionRing& ring);

struct SolverOptions {
  static constexpr std::uint64_t kDefaultSeed = 20240917;

  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  /// extra attempts with fresh coefficients on a degenerate spectrum
  int retries = 5;
};

struct CharacterSolution {
  CharacterVector values;
  double residual = 0.0;
};

/// All solutions of the character system.
///
/// Complete rings: eigen-decomposes sum_p c_p M_p^T for random c_p and reads
/// each eigenvector off as a solution.  Truncated rings: the system keeps
/// only complete pairs, which leaves the values determined by a single
/// generator; its clipped fusion matrix is decomposed instead (the
/// non-unit irrep with the fewest clipped pairs).
///
/// Solutions are sorted (real parts descending, then imaginary parts
/// descending, componentwise).  Throws DegenerateSpectrum after the retries
/// run out and ConvergenceError when a residual exceeds tol.
std::vector<CharacterSolution> solve_character_system(const FusionRing& ring, const SolverOptions& options = {});

/// max over complete pairs (p, q) of |alpha_p alpha_q - sum_r N^r_{p,q} alpha_r|.
double verify_solution(const FusionRing& ring, const CharacterVector& alpha);

/// Real overload for dimension-like vectors.
double verify_solution(const FusionRing& ring, const std::vector<double>& alpha);

struct IntegerSearchOptions {
  std::int64_t bound = 10;
  /// maximum number of values tried before giving up
  std::uint64_t node_limit = 20'000'000;
};

/// Every vector with entries in 1..bound and alpha_unit = 1 solving the
/// (complete part of the) character system, sorted lexicographically.
/// Exhaustive backtracking with forced-value propagation.  Throws
/// ResourceLimit when node_limit is exceeded.
std::vector<std::vector<std::int64_t>> integer_positive_solutions(const FusionRing& ring,
                                                                  const IntegerSearchOptions& options = {});

struct FpDimensions {
  std::vector<double> values;
  double residual = 0.0;
  bool truncated = false;
};

/// Frobenius-Perron dimensions.  On complete rings this is the Perron
/// eigenvector of sum_p M_p^T normalized at the unit, cross-checked against
/// the spectral radius of each M_p individually.  On truncated rings the
/// generator's Perron eigenvector is used (see solve_character_system).
FpDimensions fp_dimensions(const FusionRing& ring);

/// Spectral radius of a nonnegative integer matrix.
double perron_root(const IntMatrix& m);

}  // namespace fusionscope
