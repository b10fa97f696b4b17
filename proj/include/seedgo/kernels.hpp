#pragma once

#include <cstddef>

namespace seedgo::kernels {

// Dense double-precision kernels behind the equilibrium solvers: simplex
// pivot row updates are axpy, the regret-matching loop is matrix-vector
// products plus elementwise updates and reductions. Each operation has a
// scalar reference implementation and an AVX2 variant; the backend is picked
// once at startup (overridable via set_backend or SEEDGO_KERNELS=scalar|avx2)
// and the variants are equivalence-tested against each other.
struct Ops {
  // y = A x, A row-major (rows x cols)
  void (*matvec)(const double* a, int rows, int cols, const double* x, double* y);
  // y = A^T x
  void (*matvec_t)(const double* a, int rows, int cols, const double* x, double* y);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, int n);
  double (*dot)(const double* x, const double* y, int n);
  double (*sum)(const double* x, int n);
  void (*scale)(double* x, double alpha, int n);
  double (*max)(const double* x, int n);
  double (*min)(const double* x, int n);
  // r_i = max(0, r_i + u_i + shift)
  void (*relu_add)(double* r, const double* u, double shift, int n);
};

enum class Backend { Scalar, Avx2 };

const Ops& scalar_ops();
bool avx2_supported();
// Null when compiled without AVX2 support.
const Ops* avx2_ops();

// Active dispatch table. Defaults to the widest supported backend.
const Ops& ops();
Backend active_backend();
// Returns false (and leaves the dispatch unchanged) if unsupported.
bool set_backend(Backend backend);
const char* backend_name(Backend backend);

}  // namespace seedgo::kernels
