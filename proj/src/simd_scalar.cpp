#include "cycletrack/simd.hpp"

namespace cycletrack::simd::detail {

double dot_scalar(const double* a, const double* b, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double* y, double alpha, const double* x, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void madd_scalar(double* z, const double* a, const double* b, size_t n) {
  for (size_t i = 0; i < n; ++i) z[i] += a[i] * b[i];
}

void scale_add_scalar(double* y, double s, const double* x, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] = s * y[i] + x[i];
}

double sum_sq_scalar(const double* x, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

}  // namespace cycletrack::simd::detail
