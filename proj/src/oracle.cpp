#include "seedgo/oracle.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace seedgo::oracle {

namespace {

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve_linear(std::vector<double> a, std::vector<double> b, int n,
                  std::vector<double>* out) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a[r * n + col]) > std::fabs(a[pivot * n + col])) pivot = r;
    }
    if (std::fabs(a[pivot * n + col]) < 1e-12) return false;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      std::swap(b[pivot], b[col]);
    }
    const double inv = 1.0 / a[col * n + col];
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r * n + col] * inv;
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  out->resize(n);
  for (int i = 0; i < n; ++i) (*out)[i] = b[i] / a[i * n + i];
  return true;
}

bool next_combination(std::vector<int>& comb, int limit) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == limit - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

}  // namespace

OracleResult support_enumeration(const Matrix& m, double tol) {
  OracleResult result;
  const int rows = m.rows;
  const int cols = m.cols;
  const int kmax = std::min(rows, cols);

  for (int k = 1; k <= kmax; ++k) {
    std::vector<int> rsup(k), csup(k);
    std::iota(rsup.begin(), rsup.end(), 0);
    do {
      std::iota(csup.begin(), csup.end(), 0);
      do {
        // Equalizing x over rsup: every column in csup yields value v.
        const int n = k + 1;
        std::vector<double> a(n * n, 0.0), b(n, 0.0), xv, yv;
        for (int jj = 0; jj < k; ++jj) {
          for (int ii = 0; ii < k; ++ii) a[jj * n + ii] = m.at(rsup[ii], csup[jj]);
          a[jj * n + k] = -1.0;
        }
        for (int ii = 0; ii < k; ++ii) a[k * n + ii] = 1.0;
        b[k] = 1.0;
        if (!solve_linear(a, b, n, &xv)) continue;

        // Equalizing y over csup.
        std::fill(a.begin(), a.end(), 0.0);
        std::fill(b.begin(), b.end(), 0.0);
        for (int ii = 0; ii < k; ++ii) {
          for (int jj = 0; jj < k; ++jj) a[ii * n + jj] = m.at(rsup[ii], csup[jj]);
          a[ii * n + k] = -1.0;
        }
        for (int jj = 0; jj < k; ++jj) a[k * n + jj] = 1.0;
        b[k] = 1.0;
        if (!solve_linear(a, b, n, &yv)) continue;

        const double v = xv[k];
        if (std::fabs(v - yv[k]) > tol) continue;

        bool ok = true;
        for (int ii = 0; ii < k && ok; ++ii) ok = xv[ii] >= -tol;
        for (int jj = 0; jj < k && ok; ++jj) ok = yv[jj] >= -tol;
        if (!ok) continue;

        // No outside column lets the minimizer do better than v...
        for (int j = 0; j < cols && ok; ++j) {
          bool in = false;
          for (int jj = 0; jj < k; ++jj) in |= csup[jj] == j;
          if (in) continue;
          double xm = 0.0;
          for (int ii = 0; ii < k; ++ii) xm += xv[ii] * m.at(rsup[ii], j);
          ok = xm >= v - tol;
        }
        // ...and no outside row lets the maximizer do better.
        for (int i = 0; i < rows && ok; ++i) {
          bool in = false;
          for (int ii = 0; ii < k; ++ii) in |= rsup[ii] == i;
          if (in) continue;
          double my = 0.0;
          for (int jj = 0; jj < k; ++jj) my += m.at(i, csup[jj]) * yv[jj];
          ok = my <= v + tol;
        }
        if (!ok) continue;

        result.found = true;
        result.x.weights.assign(rows, 0.0);
        result.y.weights.assign(cols, 0.0);
        for (int ii = 0; ii < k; ++ii) result.x.weights[rsup[ii]] = std::max(0.0, xv[ii]);
        for (int jj = 0; jj < k; ++jj) result.y.weights[csup[jj]] = std::max(0.0, yv[jj]);
        result.x.normalize();
        result.y.normalize();
        double value = 0.0;
        for (int i = 0; i < rows; ++i) {
          for (int j = 0; j < cols; ++j) {
            value += result.x.weights[i] * m.at(i, j) * result.y.weights[j];
          }
        }
        result.value = value;
        return result;
      } while (next_combination(csup, cols));
    } while (next_combination(rsup, rows));
  }
  return result;
}

}  // namespace seedgo::oracle
