#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "seedgo/kernels.hpp"
#include "seedgo/rng.hpp"

using namespace seedgo;

namespace {

std::vector<double> random_vec(SplitMix64& rng, int n, double lo = -2.0, double hi = 2.0) {
  std::vector<double> v(n);
  for (double& x : v) {
    x = lo + (hi - lo) * (static_cast<double>(rng.next_u64() >> 11) * 0x1p-53);
  }
  return v;
}

bool close(double a, double b, double tol = 1e-12) {
  return std::fabs(a - b) <= tol * (1.0 + std::fabs(a) + std::fabs(b));
}

}  // namespace

TEST_CASE("scalar kernels match naive formulas") {
  const auto& k = kernels::scalar_ops();
  SplitMix64 rng(1);
  const int rows = 7, cols = 11;
  const auto a = random_vec(rng, rows * cols);
  const auto x = random_vec(rng, cols);
  const auto xt = random_vec(rng, rows);

  std::vector<double> y(rows);
  k.matvec(a.data(), rows, cols, x.data(), y.data());
  for (int i = 0; i < rows; ++i) {
    double want = 0.0;
    for (int j = 0; j < cols; ++j) want += a[i * cols + j] * x[j];
    CHECK(close(y[i], want));
  }

  std::vector<double> yt(cols);
  k.matvec_t(a.data(), rows, cols, xt.data(), yt.data());
  for (int j = 0; j < cols; ++j) {
    double want = 0.0;
    for (int i = 0; i < rows; ++i) want += a[i * cols + j] * xt[i];
    CHECK(close(yt[j], want));
  }

  CHECK(close(k.sum(x.data(), cols), [&] {
          double s = 0.0;
          for (double v : x) s += v;
          return s;
        }()));
  CHECK(k.max(x.data(), cols) == *std::max_element(x.begin(), x.end()));
  CHECK(k.min(x.data(), cols) == *std::min_element(x.begin(), x.end()));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::avx2_supported() || kernels::avx2_ops() == nullptr) {
    return;  // nothing to compare on this host
  }
  const auto& s = kernels::scalar_ops();
  const auto& v = *kernels::avx2_ops();
  SplitMix64 rng(42);

  // Sizes straddling the vector width, including remainders.
  for (int n : {1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 33, 64, 100, 401}) {
    const auto x = random_vec(rng, n);
    const auto y = random_vec(rng, n);

    CHECK(close(s.dot(x.data(), y.data(), n), v.dot(x.data(), y.data(), n)));
    CHECK(close(s.sum(x.data(), n), v.sum(x.data(), n)));
    CHECK(s.max(x.data(), n) == v.max(x.data(), n));
    CHECK(s.min(x.data(), n) == v.min(x.data(), n));

    auto ys = y, yv = y;
    s.axpy(0.77, x.data(), ys.data(), n);
    v.axpy(0.77, x.data(), yv.data(), n);
    for (int i = 0; i < n; ++i) CHECK(close(ys[i], yv[i]));

    auto xs = x, xv = x;
    s.scale(xs.data(), -1.3, n);
    v.scale(xv.data(), -1.3, n);
    for (int i = 0; i < n; ++i) CHECK(close(xs[i], xv[i]));

    auto rs = random_vec(rng, n, 0.0, 1.0);
    auto rv = rs;
    s.relu_add(rs.data(), x.data(), -0.25, n);
    v.relu_add(rv.data(), x.data(), -0.25, n);
    for (int i = 0; i < n; ++i) CHECK(close(rs[i], rv[i]));
  }

  for (auto [rows, cols] : {std::pair{3, 5}, {8, 8}, {13, 50}, {50, 13}, {61, 61}}) {
    const auto a = random_vec(rng, rows * cols);
    const auto x = random_vec(rng, cols);
    const auto xt = random_vec(rng, rows);
    std::vector<double> ys(rows), yv(rows), ts(cols), tv(cols);
    s.matvec(a.data(), rows, cols, x.data(), ys.data());
    v.matvec(a.data(), rows, cols, x.data(), yv.data());
    for (int i = 0; i < rows; ++i) CHECK(close(ys[i], yv[i]));
    s.matvec_t(a.data(), rows, cols, xt.data(), ts.data());
    v.matvec_t(a.data(), rows, cols, xt.data(), tv.data());
    for (int j = 0; j < cols; ++j) CHECK(close(ts[j], tv[j]));
  }
}

TEST_CASE("backend selection is sticky and reversible") {
  const kernels::Backend original = kernels::active_backend();
  CHECK(kernels::set_backend(kernels::Backend::Scalar));
  CHECK(kernels::active_backend() == kernels::Backend::Scalar);
  if (kernels::avx2_supported()) {
    CHECK(kernels::set_backend(kernels::Backend::Avx2));
    CHECK(kernels::active_backend() == kernels::Backend::Avx2);
  }
  CHECK(kernels::set_backend(original));
}
