#include <algorithm>
#include <vector>

#include "seedgo/kernels.hpp"
#include "seedgo/portfolio.hpp"

namespace seedgo::detail {

namespace {

// r -> r / sum(r) into `out`, or uniform when all regrets are zero.
void regret_to_strategy(const std::vector<double>& r, std::vector<double>& out) {
  const auto& k = kernels::ops();
  const int n = static_cast<int>(r.size());
  const double s = k.sum(r.data(), n);
  if (s > 0.0) {
    std::copy(r.begin(), r.end(), out.begin());
    k.scale(out.data(), 1.0 / s, n);
  } else {
    std::fill(out.begin(), out.end(), 1.0 / n);
  }
}

}  // namespace

// Regret matching+ with alternating updates and linearly weighted averaging.
// The averaged pair carries the certificate: iterate until its duality gap
// passes config.epsilon.
NashEquilibrium solve_nash_regret_matching(const Matrix& m, const SolverConfig& config) {
  const auto& k = kernels::ops();
  const int rows = m.rows;
  const int cols = m.cols;
  const long max_iters = config.max_iterations > 0 ? config.max_iterations : 1000000;

  std::vector<double> rx(rows, 0.0), ry(cols, 0.0);
  std::vector<double> x(rows, 1.0 / rows), y(cols, 1.0 / cols);
  std::vector<double> xs(rows, 0.0), ys(cols, 0.0);
  std::vector<double> u(rows), g(cols), neg_g(cols);
  double weight_sum = 0.0;

  NashEquilibrium best;
  best.x.weights.assign(rows, 1.0 / rows);
  best.y.weights.assign(cols, 1.0 / cols);
  best.duality_gap = exploitability(m, best.x, best.y);
  best.value = 0.0;

  MixedStrategy xa, ya;
  xa.weights.resize(rows);
  ya.weights.resize(cols);

  long check_at = 1;
  long check_interval = 64;
  long t = 0;
  while (t < max_iters) {
    ++t;
    // Row player regrets against the current column strategy.
    k.matvec(m.a.data(), rows, cols, y.data(), u.data());
    const double ev_x = k.dot(x.data(), u.data(), rows);
    k.relu_add(rx.data(), u.data(), -ev_x, rows);
    regret_to_strategy(rx, x);

    // Column player (minimizer) regrets against the updated row strategy.
    k.matvec_t(m.a.data(), rows, cols, x.data(), g.data());
    const double ev_y = k.dot(g.data(), y.data(), cols);
    std::copy(g.begin(), g.end(), neg_g.begin());
    k.scale(neg_g.data(), -1.0, cols);
    k.relu_add(ry.data(), neg_g.data(), ev_y, cols);
    regret_to_strategy(ry, y);

    const double w = static_cast<double>(t);
    k.axpy(w, x.data(), xs.data(), rows);
    k.axpy(w, y.data(), ys.data(), cols);
    weight_sum += w;

    if (t >= check_at || t == max_iters) {
      std::copy(xs.begin(), xs.end(), xa.weights.begin());
      std::copy(ys.begin(), ys.end(), ya.weights.begin());
      k.scale(xa.weights.data(), 1.0 / weight_sum, rows);
      k.scale(ya.weights.data(), 1.0 / weight_sum, cols);
      const double gap = exploitability(m, xa, ya);
      if (gap < best.duality_gap) {
        best.x = xa;
        best.y = ya;
        best.duality_gap = gap;
      }
      if (gap <= config.epsilon) break;
      check_interval = check_interval + check_interval / 4 + 1;
      check_at = t + check_interval;
    }
  }

  best.x.normalize();
  best.y.normalize();
  k.matvec(m.a.data(), rows, cols, best.y.weights.data(), u.data());
  best.value = k.dot(best.x.weights.data(), u.data(), rows);
  best.iterations = t;
  best.converged = best.duality_gap <= config.epsilon;
  return best;
}

}  // namespace seedgo::detail
