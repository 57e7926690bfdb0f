#include "fusionscope/char_solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include <Eigen/Eigenvalues>

#include "fusionscope/errors.hpp"

namespace fusionscope {

namespace {

using ComplexVector = Eigen::VectorXcd;

Eigen::MatrixXd transposed_double(const IntMatrix& m) { return m.transpose().cast<double>(); }

double min_gap(const ComplexVector& eigenvalues) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    for (Eigen::Index j = i + 1; j < eigenvalues.size(); ++j) gap = std::min(gap, std::abs(eigenvalues[i] - eigenvalues[j]));
  return gap;
}

/// Generator used for truncated rings: the non-unit irrep with the fewest
/// clipped pairs, smallest index on ties.
std::optional<Index> truncation_generator(const FusionRing& ring) {
  std::optional<Index> best;
  int best_clipped = 0;
  for (Index p = 0; p < ring.rank(); ++p) {
    if (p == ring.unit()) continue;
    int clipped = 0;
    for (Index q = 0; q < ring.rank(); ++q) clipped += ring.pair_complete(p, q) ? 0 : 1;
    if (!best || clipped < best_clipped) {
      best = p;
      best_clipped = clipped;
    }
  }
  return best;
}

bool solution_less(const CharacterSolution& a, const CharacterSolution& b) {
  constexpr double eps = 1e-7;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double dr = a.values[i].real() - b.values[i].real();
    if (std::abs(dr) > eps) return dr > 0;
  }
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double di = a.values[i].imag() - b.values[i].imag();
    if (std::abs(di) > eps) return di > 0;
  }
  return false;
}

std::vector<CharacterSolution> solutions_from_eigenvectors(const FusionRing& ring, const Eigen::MatrixXcd& vectors,
                                                           double tol) {
  std::vector<CharacterSolution> out;
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    const std::complex<double> pivot = vectors(ring.unit(), k);
    if (std::abs(pivot) < 1e-12) throw ConvergenceError("eigenvector vanishes at the unit");
    CharacterSolution s;
    s.values.resize(ring.rank());
    for (Index p = 0; p < ring.rank(); ++p) {
      auto v = vectors(p, k) / pivot;
      // exact zeros and reals print cleanly and compare stably
      if (std::abs(v.imag()) < 1e-13) v.imag(0.0);
      if (std::abs(v.real()) < 1e-13) v.real(0.0);
      s.values[p] = v;
    }
    s.values[ring.unit()] = 1.0;
    s.residual = verify_solution(ring, s.values);
    if (!(s.residual < tol))
      throw ConvergenceError("character solution residual " + std::to_string(s.residual) + " exceeds tolerance");
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), solution_less);
  return out;
}

}  // namespace

FusionMatrixSet fusion_matrices(const FusionRing& ring) {
  const int n = ring.rank();
  FusionMatrixSet out;
  out.matrices.assign(n, IntMatrix::Zero(n, n));
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q)
      for (const auto& c : ring.product(p, q)) out.matrices[p](c.irrep, q) = c.mult;

  if (!ring.is_truncated()) {
    if (out.matrices[ring.unit()] != IntMatrix::Identity(n, n))
      throw InternalConsistency("fusion matrix of the unit is not the identity");
    for (Index p = 0; p < n; ++p)
      for (Index q = p + 1; q < n; ++q)
        if (out.matrices[p] * out.matrices[q] != out.matrices[q] * out.matrices[p])
          throw InternalConsistency("fusion matrices of " + ring.label(p) + " and " + ring.label(q) +
                                    " do not commute");
    out.commutation_checked = true;
  }
  return out;
}

double verify_solution(const FusionRing& ring, const CharacterVector& alpha) {
  if (static_cast<int>(alpha.size()) != ring.rank()) throw UsageError("solution vector has the wrong length");
  double worst = 0.0;
  for (Index p = 0; p < ring.rank(); ++p) {
    for (Index q = p; q < ring.rank(); ++q) {
      if (!ring.pair_complete(p, q)) continue;
      std::complex<double> rhs = 0.0;
      for (const auto& c : ring.product(p, q)) rhs += static_cast<double>(c.mult) * alpha[c.irrep];
      worst = std::max(worst, std::abs(alpha[p] * alpha[q] - rhs));
    }
  }
  return worst;
}

double verify_solution(const FusionRing& ring, const std::vector<double>& alpha) {
  return verify_solution(ring, CharacterVector(alpha.begin(), alpha.end()));
}

std::vector<CharacterSolution> solve_character_system(const FusionRing& ring, const SolverOptions& options) {
  const auto fm = fusion_matrices(ring);
  const int n = ring.rank();

  if (ring.is_truncated()) {
    const auto gen = truncation_generator(ring);
    if (!gen) return {CharacterSolution{{1.0}, 0.0}};
    Eigen::EigenSolver<Eigen::MatrixXd> es(transposed_double(fm.matrices[*gen]));
    if (es.info() != Eigen::Success) throw ConvergenceError("eigen-decomposition failed");
    if (min_gap(es.eigenvalues()) < 1e-8)
      throw DegenerateSpectrum("clipped generator matrix of " + ring.label(*gen) + " has a repeated eigenvalue");
    return solutions_from_eigenvectors(ring, es.eigenvectors(), options.tol);
  }

  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(n, n);
    for (Index p = 0; p < n; ++p) combo += coef(rng) * transposed_double(fm.matrices[p]);
    Eigen::EigenSolver<Eigen::MatrixXd> es(combo);
    if (es.info() != Eigen::Success) continue;
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    if (min_gap(es.eigenvalues()) < 1e-6 * scale) continue;
    return solutions_from_eigenvectors(ring, es.eigenvectors(), options.tol);
  }
  throw DegenerateSpectrum("random combination of fusion matrices stayed degenerate after " +
                           std::to_string(options.retries + 1) + " attempts");
}

// ------------------------------------------------------ integer search

namespace {

struct Equation {
  Index p;
  Index q;
  std::vector<Constituent> rhs;
};

class IntegerSearch {
 public:
  IntegerSearch(const FusionRing& ring, const IntegerSearchOptions& options)
      : ring_(ring), options_(options), value_(ring.rank(), 0) {
    for (Index p = 0; p < ring.rank(); ++p)
      for (Index q = p; q < ring.rank(); ++q)
        if (ring.pair_complete(p, q)) {
          auto prod = ring.product(p, q);
          equations_.push_back({p, q, {prod.begin(), prod.end()}});
        }
  }

  std::vector<std::vector<std::int64_t>> run() {
    if (options_.bound < 1) return {};
    if (assign(ring_.unit(), 1) && propagate()) descend();
    undo_to(0);
    std::sort(solutions_.begin(), solutions_.end());
    return std::move(solutions_);
  }

 private:
  bool assign(Index p, std::int64_t v) {
    if (v < 1 || v > options_.bound) return false;
    if (value_[p] != 0) return value_[p] == v;
    value_[p] = v;
    trail_.push_back(p);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  /// Checks every equation and fills in values they force.  False on a
  /// contradiction.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& eq : equations_) {
        const std::int64_t a = value_[eq.p];
        const std::int64_t b = value_[eq.q];
        std::int64_t known = 0;
        std::int64_t free_weight = 0;
        const Constituent* free_term = nullptr;
        int free_count = 0;
        for (const auto& c : eq.rhs) {
          if (value_[c.irrep] != 0) {
            known = checked_add(known, checked_mul(c.mult, value_[c.irrep]));
          } else {
            free_weight = checked_add(free_weight, c.mult);
            if (!free_term || free_term->irrep != c.irrep) ++free_count;
            free_term = &c;
          }
        }
        if (a != 0 && b != 0) {
          const std::int64_t lhs = checked_mul(a, b);
          const std::int64_t rest = lhs - known;
          if (free_count == 0) {
            if (rest != 0) return false;
          } else if (rest < free_weight || rest > checked_mul(free_weight, options_.bound)) {
            return false;
          } else if (free_count == 1) {
            if (rest % free_term->mult != 0) return false;
            if (!assign(free_term->irrep, rest / free_term->mult)) return false;
            changed = true;
          }
        } else if (free_count == 0) {
          // right side known: solve for the missing factor
          if (a == 0 && b == 0) {
            if (eq.p != eq.q) continue;
            const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(known))));
            if (root * root != known || !assign(eq.p, root)) return false;
            changed = true;
          } else {
            const std::int64_t have = a != 0 ? a : b;
            const Index missing = a != 0 ? eq.q : eq.p;
            if (known % have != 0 || !assign(missing, known / have)) return false;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  void descend() {
    Index next = -1;
    for (Index p = 0; p < ring_.rank() && next < 0; ++p)
      if (value_[p] == 0) next = p;
    if (next < 0) {
      solutions_.push_back(value_);
      return;
    }
    for (std::int64_t v = 1; v <= options_.bound; ++v) {
      if (++nodes_ > options_.node_limit)
        throw ResourceLimit("integer solution search exceeded " + std::to_string(options_.node_limit) + " nodes");
      const std::size_t mark = trail_.size();
      if (assign(next, v) && propagate()) descend();
      undo_to(mark);
    }
  }

  const FusionRing& ring_;
  IntegerSearchOptions options_;
  std::vector<Equation> equations_;
  std::vector<std::int64_t> value_;
  std::vector<Index> trail_;
  std::vector<std::vector<std::int64_t>> solutions_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<std::vector<std::int64_t>> integer_positive_solutions(const FusionRing& ring,
                                                                  const IntegerSearchOptions& options) {
  return IntegerSearch(ring, options).run();
}

// ------------------------------------------------------- FP dimensions

double perron_root(const IntMatrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(m.cast<double>(), /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

FpDimensions fp_dimensions(const FusionRing& ring) {
  const auto fm = fusion_matrices(ring);
  const int n = ring.rank();
  FpDimensions out;
  out.truncated = ring.is_truncated();

  Eigen::MatrixXd target = Eigen::MatrixXd::Zero(n, n);
  if (out.truncated) {
    if (const auto gen = truncation_generator(ring)) target = transposed_double(fm.matrices[*gen]);
  } else {
    for (Index p = 0; p < n; ++p) target += transposed_double(fm.matrices[p]);
  }

  if (n == 1) {
    out.values = {1.0};
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(target);
    if (es.info() != Eigen::Success) throw ConvergenceError("eigen-decomposition failed");
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < es.eigenvalues().size(); ++k)
      if (es.eigenvalues()[k].real() > es.eigenvalues()[best].real()) best = k;
    const Eigen::VectorXcd v = es.eigenvectors().col(best);
    const auto pivot = v[ring.unit()];
    if (std::abs(pivot) < 1e-12) throw ConvergenceError("Perron vector vanishes at the unit");
    out.values.resize(n);
    for (Index p = 0; p < n; ++p) {
      const auto d = v[p] / pivot;
      if (std::abs(d.imag()) > 1e-8 || d.real() <= 0.0)
        throw ConvergenceError("Perron vector is not real and positive at " + ring.label(p));
      out.values[p] = d.real();
    }
    out.values[ring.unit()] = 1.0;
  }

  if (!out.truncated) {
    for (Index p = 0; p < n; ++p) {
      const double radius = perron_root(fm.matrices[p]);
      if (std::abs(radius - out.values[p]) > 1e-7 * std::max(1.0, radius))
        throw InternalConsistency("Perron root of M_" + ring.label(p) + " disagrees with the common Perron vector");
    }
  }
  out.residual = verify_solution(ring, out.values);
  return out;
}

}  // namespace fusionscope
