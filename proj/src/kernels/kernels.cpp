#include "seedgo/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace seedgo::kernels {

namespace {

void matvec_scalar(const double* a, int rows, int cols, const double* x, double* y) {
  for (int i = 0; i < rows; ++i) {
    const double* row = a + static_cast<size_t>(i) * cols;
    double acc = 0.0;
    for (int j = 0; j < cols; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matvec_t_scalar(const double* a, int rows, int cols, const double* x, double* y) {
  for (int j = 0; j < cols; ++j) y[j] = 0.0;
  for (int i = 0; i < rows; ++i) {
    const double* row = a + static_cast<size_t>(i) * cols;
    const double xi = x[i];
    for (int j = 0; j < cols; ++j) y[j] += xi * row[j];
  }
}

void axpy_scalar(double alpha, const double* x, double* y, int n) {
  for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double dot_scalar(const double* x, const double* y, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double sum_scalar(const double* x, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += x[i];
  return acc;
}

void scale_scalar(double* x, double alpha, int n) {
  for (int i = 0; i < n; ++i) x[i] *= alpha;
}

double max_scalar(const double* x, int n) {
  double m = x[0];
  for (int i = 1; i < n; ++i) {
    if (x[i] > m) m = x[i];
  }
  return m;
}

double min_scalar(const double* x, int n) {
  double m = x[0];
  for (int i = 1; i < n; ++i) {
    if (x[i] < m) m = x[i];
  }
  return m;
}

void relu_add_scalar(double* r, const double* u, double shift, int n) {
  for (int i = 0; i < n; ++i) {
    const double v = r[i] + u[i] + shift;
    r[i] = v > 0.0 ? v : 0.0;
  }
}

constexpr Ops kScalarOps = {
    matvec_scalar, matvec_t_scalar, axpy_scalar, dot_scalar, sum_scalar,
    scale_scalar,  max_scalar,      min_scalar,  relu_add_scalar,
};

struct Dispatch {
  const Ops* ops = &kScalarOps;
  Backend backend = Backend::Scalar;

  Dispatch() {
    const char* env = std::getenv("SEEDGO_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return;
    const bool want_avx2 = !env || std::strcmp(env, "avx2") == 0;
    if (want_avx2 && avx2_supported() && avx2_ops()) {
      ops = avx2_ops();
      backend = Backend::Avx2;
    }
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops& ops() { return *dispatch().ops; }

Backend active_backend() { return dispatch().backend; }

bool set_backend(Backend backend) {
  if (backend == Backend::Scalar) {
    dispatch().ops = &kScalarOps;
    dispatch().backend = Backend::Scalar;
    return true;
  }
  if (backend == Backend::Avx2 && avx2_supported() && avx2_ops()) {
    dispatch().ops = avx2_ops();
    dispatch().backend = Backend::Avx2;
    return true;
  }
  return false;
}

const char* backend_name(Backend backend) {
  return backend == Backend::Scalar ? "scalar" : "avx2";
}

}  // namespace seedgo::kernels
