#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace cycletrack {

// Row-major matrix of doubles.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }
  double* row(int r) { return v.data() + static_cast<size_t>(r) * cols; }
  const double* row(int r) const { return v.data() + static_cast<size_t>(r) * cols; }
  size_t size() const { return v.size(); }
  void zero() { std::fill(v.begin(), v.end(), 0.0); }
};

// H x W x C feature map / image, channels innermost (HWC).
struct Tensor {
  int h = 0;
  int w = 0;
  int c = 0;
  std::vector<double> v;

  Tensor() = default;
  Tensor(int h_, int w_, int c_)
      : h(h_), w(w_), c(c_), v(static_cast<size_t>(h_) * w_ * c_, 0.0) {}

  double& at(int y, int x, int ch) {
    return v[(static_cast<size_t>(y) * w + x) * c + ch];
  }
  double at(int y, int x, int ch) const {
    return v[(static_cast<size_t>(y) * w + x) * c + ch];
  }
  // Pointer to the channel vector at (y, x).
  double* px(int y, int x) { return v.data() + (static_cast<size_t>(y) * w + x) * c; }
  const double* px(int y, int x) const {
    return v.data() + (static_cast<size_t>(y) * w + x) * c;
  }
  size_t size() const { return v.size(); }
  void zero() { std::fill(v.begin(), v.end(), 0.0); }
  bool same_shape(const Tensor& o) const { return h == o.h && w == o.w && c == o.c; }
};

using Vec = std::vector<double>;

// All GEMMs accumulate into C; callers zero-fill first when needed.
// C (A.rows x B.rows) += A * B^T
void gemm_nt(const Mat& a, const Mat& b, Mat& c);
// C (A.rows x B.cols) += A * B
void gemm_nn(const Mat& a, const Mat& b, Mat& c);
// C (A.cols x B.cols) += A^T * B
void gemm_tn(const Mat& a, const Mat& b, Mat& c);

}  // namespace cycletrack
