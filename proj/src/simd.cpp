#include "cycletrack/simd.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace cycletrack::simd {

namespace {

struct KernelTable {
  Backend backend;
  double (*dot)(const double*, const double*, size_t);
  void (*axpy)(double*, double, const double*, size_t);
  void (*madd)(double*, const double*, const double*, size_t);
  void (*scale_add)(double*, double, const double*, size_t);
  double (*sum_sq)(const double*, size_t);
};

constexpr KernelTable kScalarTable = {
    Backend::scalar,       detail::dot_scalar,       detail::axpy_scalar,
    detail::madd_scalar,   detail::scale_add_scalar, detail::sum_sq_scalar,
};

constexpr KernelTable kAvx2Table = {
    Backend::avx2,       detail::dot_avx2,       detail::axpy_avx2,
    detail::madd_avx2,   detail::scale_add_avx2, detail::sum_sq_avx2,
};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

KernelTable pick_table() {
  const char* env = std::getenv("CYCLETRACK_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return kScalarTable;
    if (std::strcmp(env, "avx2") == 0) {
      if (!cpu_has_avx2()) throw std::runtime_error("CYCLETRACK_SIMD=avx2 but CPU lacks AVX2/FMA");
      return kAvx2Table;
    }
    throw std::runtime_error("CYCLETRACK_SIMD must be 'scalar' or 'avx2'");
  }
  return cpu_has_avx2() ? kAvx2Table : kScalarTable;
}

KernelTable& table() {
  static KernelTable t = pick_table();
  return t;
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

Backend active_backend() { return table().backend; }

bool backend_supported(Backend b) {
  return b == Backend::scalar || cpu_has_avx2();
}

void force_backend(Backend b) {
  if (!backend_supported(b)) throw std::runtime_error("requested SIMD backend not supported on this CPU");
  table() = (b == Backend::avx2) ? kAvx2Table : kScalarTable;
}

double dot(const double* a, const double* b, size_t n) { return table().dot(a, b, n); }
void axpy(double* y, double alpha, const double* x, size_t n) { table().axpy(y, alpha, x, n); }
void madd(double* z, const double* a, const double* b, size_t n) { table().madd(z, a, b, n); }
void scale_add(double* y, double s, const double* x, size_t n) { table().scale_add(y, s, x, n); }
double sum_sq(const double* x, size_t n) { return table().sum_sq(x, n); }

}  // namespace cycletrack::simd
