#pragma once

#include <cstddef>

// Data-parallel inner loops used by the tensor/GEMM layer, the depthwise
// cross-correlation and the SGD update. Each kernel has a scalar reference
// implementation and an AVX2+FMA variant; the active one is picked at
// runtime from CPU capabilities (override with CYCLETRACK_SIMD=scalar|avx2
// or force_backend()). Scalar and AVX2 results differ only by floating-point
// reassociation; the equivalence test suite bounds that difference.

namespace cycletrack::simd {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
Backend active_backend();
bool backend_supported(Backend b);
// Throws std::runtime_error if the backend is not supported on this CPU.
void force_backend(Backend b);

// dot(a, b) = sum_i a[i]*b[i]
double dot(const double* a, const double* b, size_t n);
// y[i] += alpha * x[i]
void axpy(double* y, double alpha, const double* x, size_t n);
// z[i] += a[i] * b[i]
void madd(double* z, const double* a, const double* b, size_t n);
// y[i] = s * y[i] + x[i]   (momentum-style update)
void scale_add(double* y, double s, const double* x, size_t n);
// sum_i x[i]*x[i]
double sum_sq(const double* x, size_t n);

namespace detail {

double dot_scalar(const double* a, const double* b, size_t n);
void axpy_scalar(double* y, double alpha, const double* x, size_t n);
void madd_scalar(double* z, const double* a, const double* b, size_t n);
void scale_add_scalar(double* y, double s, const double* x, size_t n);
double sum_sq_scalar(const double* x, size_t n);

double dot_avx2(const double* a, const double* b, size_t n);
void axpy_avx2(double* y, double alpha, const double* x, size_t n);
void madd_avx2(double* z, const double* a, const double* b, size_t n);
void scale_add_avx2(double* y, double s, const double* x, size_t n);
double sum_sq_avx2(const double* x, size_t n);

}  // namespace detail

}  // namespace cycletrack::simd
