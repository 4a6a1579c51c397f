#include "cycletrack/image.hpp"

#include <algorithm>
#include <cmath>

namespace cycletrack {

size_t BinaryMask::count() const {
  size_t n = 0;
  for (uint8_t p : v) n += (p != 0);
  return n;
}

BinaryMask IndexMask::instance(int id) const {
  BinaryMask m(h, w);
  m.instance_id = id;
  for (size_t i = 0; i < v.size(); ++i) m.v[i] = (v[i] == id) ? 1 : 0;
  return m;
}

int IndexMask::max_id() const {
  int m = 0;
  for (uint8_t p : v) m = std::max(m, static_cast<int>(p));
  return m;
}

void sample_bilinear(const Image& img, double x, double y, const double fill[3], double out[3]) {
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const double fx = x - x0;
  const double fy = y - y0;

  auto read = [&](int yy, int xx, int ch) -> double {
    if (yy < 0 || yy >= img.h || xx < 0 || xx >= img.w) return fill[ch];
    return img.at(yy, xx, ch);
  };

  for (int ch = 0; ch < 3; ++ch) {
    const double top = (1.0 - fx) * read(y0, x0, ch) + fx * read(y0, x0 + 1, ch);
    const double bot = (1.0 - fx) * read(y0 + 1, x0, ch) + fx * read(y0 + 1, x0 + 1, ch);
    out[ch] = (1.0 - fy) * top + fy * bot;
  }
}

void mean_color(const Image& img, double out[3]) {
  out[0] = out[1] = out[2] = 0.0;
  if (img.empty()) return;
  const size_t n = static_cast<size_t>(img.h) * img.w;
  for (size_t i = 0; i < n; ++i) {
    out[0] += img.px[i * 3 + 0];
    out[1] += img.px[i * 3 + 1];
    out[2] += img.px[i * 3 + 2];
  }
  out[0] /= n;
  out[1] /= n;
  out[2] /= n;
}

}  // namespace cycletrack
