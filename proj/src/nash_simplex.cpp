#include <cmath>
#include <vector>

#include "seedgo/kernels.hpp"
#include "seedgo/portfolio.hpp"

namespace seedgo::detail {

namespace {

// Primal simplex for the classic game LP. With all entries shifted >= 1,
// the column player's LP  max 1'w  s.t.  M'w <= 1, w >= 0  starts feasible
// from the slack basis, and the row player's strategy is the dual solution
// read off the slack reduced costs. Strategies are the normalized (w, u);
// the shifted value is 1 / sum(w).
struct Tableau {
  int m, n;       // constraints (rows of M'), structural vars (cols of M')
  int width;      // n + m + 1 (structurals, slacks, rhs)
  std::vector<double> t;
  std::vector<int> basis;  // basis[row] = variable index

  double* row(int i) { return t.data() + static_cast<size_t>(i) * width; }
  double* obj() { return row(m); }
};

constexpr double kPivotTol = 1e-11;

int pick_entering(Tableau& tb, bool bland) {
  const double* obj = tb.obj();
  const int cols = tb.n + tb.m;
  if (bland) {
    for (int j = 0; j < cols; ++j) {
      if (obj[j] < -kPivotTol) return j;
    }
    return -1;
  }
  int best = -1;
  double best_val = -kPivotTol;
  for (int j = 0; j < cols; ++j) {
    if (obj[j] < best_val) {
      best_val = obj[j];
      best = j;
    }
  }
  return best;
}

int pick_leaving(Tableau& tb, int enter) {
  int leave = -1;
  double best_ratio = 0.0;
  for (int i = 0; i < tb.m; ++i) {
    const double* r = tb.row(i);
    const double coef = r[enter];
    if (coef <= kPivotTol) continue;
    const double ratio = r[tb.n + tb.m] / coef;
    if (leave < 0 || ratio < best_ratio - 1e-14 ||
        (ratio < best_ratio + 1e-14 && tb.basis[i] < tb.basis[leave])) {
      best_ratio = ratio;
      leave = i;
    }
  }
  return leave;
}

void pivot(Tableau& tb, int leave, int enter) {
  const auto& k = kernels::ops();
  double* prow = tb.row(leave);
  const double inv = 1.0 / prow[enter];
  k.scale(prow, inv, tb.width);
  prow[enter] = 1.0;  // kill round-off on the pivot element
  for (int i = 0; i <= tb.m; ++i) {
    if (i == leave) continue;
    double* r = tb.row(i);
    const double factor = r[enter];
    if (factor == 0.0) continue;
    k.axpy(-factor, prow, r, tb.width);
    r[enter] = 0.0;
  }
  tb.basis[leave] = enter;
}

}  // namespace

NashEquilibrium solve_nash_simplex(const Matrix& m, const SolverConfig& config) {
  const int rows = m.rows;
  const int cols = m.cols;

  double min_entry = m.a[0];
  for (double v : m.a) {
    if (v < min_entry) min_entry = v;
  }
  const double shift = 1.0 - min_entry;  // all shifted entries >= 1

  Tableau tb;
  tb.m = rows;
  tb.n = cols;
  tb.width = cols + rows + 1;
  tb.t.assign(static_cast<size_t>(rows + 1) * tb.width, 0.0);
  tb.basis.resize(rows);
  for (int i = 0; i < rows; ++i) {
    double* r = tb.row(i);
    for (int j = 0; j < cols; ++j) r[j] = m.at(i, j) + shift;
    r[cols + i] = 1.0;
    r[tb.width - 1] = 1.0;
    tb.basis[i] = cols + i;
  }
  for (int j = 0; j < cols; ++j) tb.obj()[j] = -1.0;

  const long max_iters =
      config.max_iterations > 0 ? config.max_iterations : std::max(1000L, 50L * (rows + cols));
  const long bland_after = 10L * (rows + cols);

  long iter = 0;
  bool optimal = false;
  for (; iter < max_iters; ++iter) {
    const int enter = pick_entering(tb, iter >= bland_after);
    if (enter < 0) {
      optimal = true;
      break;
    }
    const int leave = pick_leaving(tb, enter);
    if (leave < 0) break;  // unbounded: impossible for this LP, bail safely
    pivot(tb, leave, enter);
  }

  NashEquilibrium eq;
  eq.iterations = iter;

  // Column player's strategy from the basic structural variables.
  std::vector<double> w(cols, 0.0);
  for (int i = 0; i < rows; ++i) {
    if (tb.basis[i] < cols) w[tb.basis[i]] = std::max(0.0, tb.row(i)[tb.width - 1]);
  }
  // Row player's strategy from the duals under the slack columns.
  std::vector<double> u(rows, 0.0);
  for (int i = 0; i < rows; ++i) u[i] = std::max(0.0, tb.obj()[cols + i]);

  eq.y.weights = std::move(w);
  eq.x.weights = std::move(u);
  eq.y.normalize();
  eq.x.normalize();
  eq.value = 0.0;
  for (int i = 0; i < rows; ++i) {
    eq.value += eq.x.weights[i] *
                kernels::ops().dot(m.row(i), eq.y.weights.data(), cols);
  }
  eq.duality_gap = exploitability(m, eq.x, eq.y);
  eq.converged = optimal && eq.duality_gap <= config.epsilon;
  return eq;
}

}  // namespace seedgo::detail
