#include "cycletrack/tensor.hpp"

#include <stdexcept>

#include "cycletrack/simd.hpp"

namespace cycletrack {

void gemm_nt(const Mat& a, const Mat& b, Mat& c) {
  if (a.cols != b.cols || c.rows != a.rows || c.cols != b.rows)
    throw std::invalid_argument("gemm_nt: shape mismatch");
  const size_t k = static_cast<size_t>(a.cols);
  for (int i = 0; i < a.rows; ++i) {
    const double* arow = a.row(i);
    double* crow = c.row(i);
    for (int j = 0; j < b.rows; ++j) {
      crow[j] += simd::dot(arow, b.row(j), k);
    }
  }
}

void gemm_nn(const Mat& a, const Mat& b, Mat& c) {
  if (a.cols != b.rows || c.rows != a.rows || c.cols != b.cols)
    throw std::invalid_argument("gemm_nn: shape mismatch");
  const size_t n = static_cast<size_t>(b.cols);
  for (int i = 0; i < a.rows; ++i) {
    const double* arow = a.row(i);
    double* crow = c.row(i);
    for (int k = 0; k < a.cols; ++k) {
      if (arow[k] != 0.0) simd::axpy(crow, arow[k], b.row(k), n);
    }
  }
}

void gemm_tn(const Mat& a, const Mat& b, Mat& c) {
  if (a.rows != b.rows || c.rows != a.cols || c.cols != b.cols)
    throw std::invalid_argument("gemm_tn: shape mismatch");
  const size_t n = static_cast<size_t>(b.cols);
  for (int k = 0; k < a.rows; ++k) {
    const double* arow = a.row(k);
    const double* brow = b.row(k);
    for (int i = 0; i < a.cols; ++i) {
      if (arow[i] != 0.0) simd::axpy(c.row(i), arow[i], brow, n);
    }
  }
}

}  // namespace cycletrack
