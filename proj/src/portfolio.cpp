#include "seedgo/portfolio.hpp"

#include <cmath>
#include <stdexcept>

#include "seedgo/kernels.hpp"
#include "seedgo/rng.hpp"

namespace seedgo {

Matrix Matrix::from_result(const ResultMatrix& m) {
  Matrix out(m.k, m.k);
  for (int i = 0; i < m.k; ++i) {
    for (int j = 0; j < m.k; ++j) out.at(i, j) = m.get(i, j);
  }
  return out;
}

Matrix Matrix::one_minus_transpose() const {
  Matrix out(cols, rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out.at(j, i) = 1.0 - at(i, j);
  }
  return out;
}

MixedStrategy MixedStrategy::uniform(int n) {
  MixedStrategy s;
  s.weights.assign(n, 1.0 / n);
  return s;
}

MixedStrategy MixedStrategy::pure(int n, int index) {
  MixedStrategy s;
  s.weights.assign(n, 0.0);
  s.weights[index] = 1.0;
  return s;
}

std::vector<int> MixedStrategy::support(double threshold) const {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
    if (weights[i] > threshold) idx.push_back(i);
  }
  return idx;
}

void MixedStrategy::normalize() {
  double s = 0.0;
  for (double& w : weights) {
    if (w < 0.0) w = 0.0;  // clip solver round-off
    s += w;
  }
  if (s <= 0.0) throw std::logic_error("cannot normalize a zero strategy");
  for (double& w : weights) w /= s;
}

BestSeedPolicy best_seed(const ResultMatrix& m, uint64_t tie_break_seed) {
  SplitMix64 rng(tie_break_seed);
  std::vector<int> ties;

  int best_row = -1;
  for (int i = 0; i < m.k; ++i) {
    const int s = m.row_sum(i);
    if (s > best_row) {
      best_row = s;
      ties.clear();
    }
    if (s == best_row) ties.push_back(i);
  }
  const int i0 = ties[rng.uniform_below(ties.size())];

  int best_col = m.k + 1;
  ties.clear();
  for (int j = 0; j < m.k; ++j) {
    const int s = m.col_sum(j);
    if (s < best_col) {
      best_col = s;
      ties.clear();
    }
    if (s == best_col) ties.push_back(j);
  }
  const int j0 = ties[rng.uniform_below(ties.size())];

  return BestSeedPolicy{i0, j0, tie_break_seed};
}

double exploitability(const Matrix& m, const MixedStrategy& x, const MixedStrategy& y) {
  if (static_cast<int>(x.weights.size()) != m.rows ||
      static_cast<int>(y.weights.size()) != m.cols) {
    throw std::invalid_argument("strategy dimensions do not match the matrix");
  }
  const auto& k = kernels::ops();
  std::vector<double> my(m.rows), xm(m.cols);
  k.matvec(m.a.data(), m.rows, m.cols, y.weights.data(), my.data());
  k.matvec_t(m.a.data(), m.rows, m.cols, x.weights.data(), xm.data());
  return k.max(my.data(), m.rows) - k.min(xm.data(), m.cols);
}

NashEquilibrium solve_nash(const Matrix& m, const SolverConfig& config) {
  if (m.rows <= 0 || m.cols <= 0) throw std::invalid_argument("empty matrix");
  for (double v : m.a) {
    if (!std::isfinite(v)) throw std::invalid_argument("matrix entries must be finite");
  }
  return config.method == SolveMethod::Simplex
             ? detail::solve_nash_simplex(m, config)
             : detail::solve_nash_regret_matching(m, config);
}

MixedStrategy sparsify(const MixedStrategy& s, double alpha) {
  MixedStrategy out = s;
  double max_w = 0.0;
  for (double w : s.weights) {
    if (w > max_w) max_w = w;
  }
  const double threshold = alpha * max_w;
  for (double& w : out.weights) {
    if (w < threshold) w = 0.0;  // strict: entries equal to the threshold survive
  }
  out.normalize();
  return out;
}

std::pair<MixedStrategy, MixedStrategy> sparse_nash(const ResultMatrix& m, double alpha,
                                                    const SolverConfig& config) {
  NashEquilibrium eq = solve_nash(Matrix::from_result(m), config);
  return {sparsify(eq.x, alpha), sparsify(eq.y, alpha)};
}

}  // namespace seedgo
