#pragma once

#include <cstdint>
#include <vector>

namespace cycletrack {

// RGB image, values in [0,1], channels innermost. Pixel (row r, col c) is
// centered at continuous coordinates (x=c, y=r), origin top-left, y down.
struct Image {
  int h = 0;
  int w = 0;
  std::vector<double> px;  // h*w*3

  Image() = default;
  Image(int h_, int w_) : h(h_), w(w_), px(static_cast<size_t>(h_) * w_ * 3, 0.0) {}

  double& at(int y, int x, int ch) { return px[(static_cast<size_t>(y) * w + x) * 3 + ch]; }
  double at(int y, int x, int ch) const { return px[(static_cast<size_t>(y) * w + x) * 3 + ch]; }
  bool empty() const { return px.empty(); }
};

// Single-instance foreground mask at frame resolution, values in {0,1}.
struct BinaryMask {
  int h = 0;
  int w = 0;
  std::vector<uint8_t> v;
  int instance_id = 1;

  BinaryMask() = default;
  BinaryMask(int h_, int w_) : h(h_), w(w_), v(static_cast<size_t>(h_) * w_, 0) {}

  uint8_t& at(int y, int x) { return v[static_cast<size_t>(y) * w + x]; }
  uint8_t at(int y, int x) const { return v[static_cast<size_t>(y) * w + x]; }
  size_t count() const;
};

// Multi-instance label map: 0 = background, 1..N = instance ids. Matches the
// paletted PNG encoding on disk.
struct IndexMask {
  int h = 0;
  int w = 0;
  std::vector<uint8_t> v;

  IndexMask() = default;
  IndexMask(int h_, int w_) : h(h_), w(w_), v(static_cast<size_t>(h_) * w_, 0) {}

  uint8_t& at(int y, int x) { return v[static_cast<size_t>(y) * w + x]; }
  uint8_t at(int y, int x) const { return v[static_cast<size_t>(y) * w + x]; }

  BinaryMask instance(int id) const;
  int max_id() const;
};

// Bilinear sample at continuous (x, y); neighbours outside the image read the
// fill colour.
void sample_bilinear(const Image& img, double x, double y, const double fill[3], double out[3]);

// Mean colour over all pixels.
void mean_color(const Image& img, double out[3]);

}  // namespace cycletrack
