#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seedgo/seed_matrix.hpp"

namespace seedgo {

// Dense row-major real matrix, the solver-facing view of a ResultMatrix.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  const double* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }

  static Matrix from_result(const ResultMatrix& m);
  // The color-swapped game: entry (j, i) = 1 - entry(i, j).
  Matrix one_minus_transpose() const;
};

// Probability distribution over seed indices; entries are non-negative and
// sum to 1 within 1e-12.
struct MixedStrategy {
  std::vector<double> weights;

  static MixedStrategy uniform(int n);
  static MixedStrategy pure(int n, int index);
  std::vector<int> support(double threshold = 0.0) const;
  void normalize();
};

struct BestSeedPolicy {
  int black_index = 0;  // argmax row sum
  int white_index = 0;  // argmin column sum
  uint64_t tie_break_seed = 0;
};

enum class SolveMethod { Simplex, RegretMatching };

struct SolverConfig {
  SolveMethod method = SolveMethod::Simplex;
  double epsilon = 1e-9;
  long max_iterations = 0;  // 0 = method default

  static SolverConfig simplex(double eps = 1e-9) {
    return SolverConfig{SolveMethod::Simplex, eps, 0};
  }
  static SolverConfig regret_matching(double eps = 1e-4, long iters = 0) {
    return SolverConfig{SolveMethod::RegretMatching, eps, iters};
  }
};

struct NashEquilibrium {
  MixedStrategy x;  // Black / row player
  MixedStrategy y;  // White / column player
  double value = 0.0;
  double duality_gap = 0.0;
  bool converged = false;
  long iterations = 0;
};

// Pure strategy pair: the row maximizing the row sum of M for Black and the
// column minimizing the column sum for White. Ties are broken uniformly at
// random, seeded, so results are repeatable. Draw order: Black row first,
// then White column, from one generator.
BestSeedPolicy best_seed(const ResultMatrix& m, uint64_t tie_break_seed);

// max_i (M y)_i - min_j (x^T M)_j: zero exactly at an equilibrium, and an
// upper bound on how much either player can gain by deviating.
double exploitability(const Matrix& m, const MixedStrategy& x, const MixedStrategy& y);

// Solves the constant-sum matrix game for (x, y, v) with a duality-gap
// certificate: gap <= epsilon on every converged run. The contract is the
// certificate, not the method — Simplex solves the exact LP, RegretMatching
// iterates regret-matching+ with averaging until the certificate passes.
// A run that exhausts its iteration budget reports its best iterate with
// converged = false.
NashEquilibrium solve_nash(const Matrix& m, const SolverConfig& config = {});

// Zeroes entries strictly below alpha * max(weights) and renormalizes.
// The maximum always survives, so the result is well formed for any alpha
// in [0, 1]; entries exactly at the threshold survive too.
MixedStrategy sparsify(const MixedStrategy& s, double alpha);

// solve_nash, then sparsify x and y independently with the same alpha.
std::pair<MixedStrategy, MixedStrategy> sparse_nash(const ResultMatrix& m, double alpha,
                                                    const SolverConfig& config = {});

namespace detail {
NashEquilibrium solve_nash_simplex(const Matrix& m, const SolverConfig& config);
NashEquilibrium solve_nash_regret_matching(const Matrix& m, const SolverConfig& config);
}  // namespace detail

}  // namespace seedgo
