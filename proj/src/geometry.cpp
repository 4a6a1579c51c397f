#include "cycletrack/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "cycletrack/rng.hpp"

namespace cycletrack {

bool Box::valid() const {
  return w > 0.0 && h > 0.0 && std::isfinite(cx) && std::isfinite(cy) &&
         std::isfinite(w) && std::isfinite(h);
}

double RotatedBox::area() const {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto& p = corners[i];
    const auto& q = corners[(i + 1) % 4];
    s += p[0] * q[1] - q[0] * p[1];
  }
  return std::abs(s) / 2.0;
}

double iou(const Box& a, const Box& b) {
  const double ix = std::min(a.x1(), b.x1()) - std::max(a.x0(), b.x0());
  const double iy = std::min(a.y1(), b.y1()) - std::max(a.y0(), b.y0());
  if (ix <= 0.0 || iy <= 0.0) return 0.0;
  const double inter = ix * iy;
  return inter / (a.area() + b.area() - inter);
}

AnchorGrid make_anchor_grid(const AnchorConfig& config) {
  if (config.k < 1 || config.k != static_cast<int>(config.ratios.size()))
    throw std::invalid_argument("anchor config: k must match ratio count and be >= 1");
  for (double r : config.ratios)
    if (!(r > 0.0)) throw std::invalid_argument("anchor config: ratios must be > 0");
  if (!(config.scale > 0.0)) throw std::invalid_argument("anchor config: scale must be > 0");
  if (config.stride < 1) throw std::invalid_argument("anchor config: stride must be >= 1");
  if (config.grid_size < 1 || config.image_size < 1)
    throw std::invalid_argument("anchor config: grid/image size must be >= 1");

  AnchorGrid grid;
  grid.config = config;
  grid.anchors.reserve(static_cast<size_t>(config.grid_size) * config.grid_size * config.k);

  // All anchors share the area (scale*stride)^2; h/w equals the ratio.
  const double base = config.scale * config.stride;
  const double image_center = (config.image_size - 1) / 2.0;
  const double grid_center = (config.grid_size - 1) / 2.0;

  for (int row = 0; row < config.grid_size; ++row) {
    for (int col = 0; col < config.grid_size; ++col) {
      const double cx = (col - grid_center) * config.stride + image_center;
      const double cy = (row - grid_center) * config.stride + image_center;
      for (int a = 0; a < config.k; ++a) {
        const double r = config.ratios[a];
        grid.anchors.push_back({cx, cy, base / std::sqrt(r), base * std::sqrt(r)});
      }
    }
  }
  return grid;
}

BoxDelta encode_box(const Box& anchor, const Box& box) {
  return {(box.cx - anchor.cx) / anchor.w, (box.cy - anchor.cy) / anchor.h,
          std::log(box.w / anchor.w), std::log(box.h / anchor.h)};
}

Box decode_box(const Box& anchor, const BoxDelta& d, double clamp_log, bool* clamped) {
  double tw = d.tw;
  double th = d.th;
  bool hit = false;
  if (tw > clamp_log) { tw = clamp_log; hit = true; }
  if (tw < -clamp_log) { tw = -clamp_log; hit = true; }
  if (th > clamp_log) { th = clamp_log; hit = true; }
  if (th < -clamp_log) { th = -clamp_log; hit = true; }
  if (clamped != nullptr) *clamped = hit;
  return {d.tx * anchor.w + anchor.cx, d.ty * anchor.h + anchor.cy,
          anchor.w * std::exp(tw), anchor.h * std::exp(th)};
}

int AnchorLabels::count(AnchorLabel l) const {
  int n = 0;
  for (AnchorLabel x : labels) n += (x == l);
  return n;
}

namespace {

// Keep `keep` entries of `indices`, move the rest to `to`; uniform choice.
void subsample_to_ignore(std::vector<int>& indices, size_t keep, Rng& rng,
                         std::vector<AnchorLabel>& labels) {
  if (indices.size() <= keep) return;
  // Partial Fisher-Yates: the first `keep` slots end up as the kept set.
  for (size_t i = 0; i < keep; ++i) {
    const size_t j = i + rng.next_below(indices.size() - i);
    std::swap(indices[i], indices[j]);
  }
  for (size_t i = keep; i < indices.size(); ++i) labels[indices[i]] = AnchorLabel::ignore;
  indices.resize(keep);
}

}  // namespace

AnchorLabels assign_anchor_labels(const AnchorGrid& grid, const Box& gt,
                                  const LabelCaps& caps, double pos_iou, double neg_iou) {
  if (!gt.valid()) throw std::invalid_argument("assign_anchor_labels: invalid gt box");

  const int n = grid.count();
  AnchorLabels out;
  out.labels.assign(n, AnchorLabel::ignore);
  out.deltas.assign(n, BoxDelta{});
  out.position_positive.assign(grid.positions(), 0);

  std::vector<int> positives;
  std::vector<int> negatives;
  double best_iou = -1.0;
  int best_idx = 0;

  for (int i = 0; i < n; ++i) {
    const double v = iou(grid.anchor(i), gt);
    if (v > best_iou) {
      best_iou = v;
      best_idx = i;
    }
    if (v > pos_iou) {
      out.labels[i] = AnchorLabel::positive;
      positives.push_back(i);
    } else if (v < neg_iou) {
      out.labels[i] = AnchorLabel::negative;
      negatives.push_back(i);
    }
  }

  if (positives.empty()) {
    // Keep the sample informative: promote the single best anchor.
    out.promoted_fallback = true;
    if (out.labels[best_idx] == AnchorLabel::negative) {
      negatives.erase(std::find(negatives.begin(), negatives.end(), best_idx));
    }
    out.labels[best_idx] = AnchorLabel::positive;
    positives.push_back(best_idx);
  }

  for (int i : positives) {
    out.deltas[i] = encode_box(grid.anchor(i), gt);
    out.position_positive[grid.position_of(i)] = 1;
  }

  Rng rng(caps.seed);
  subsample_to_ignore(positives, static_cast<size_t>(std::max(caps.max_positives, 1)), rng,
                      out.labels);
  const int neg_budget = std::max(caps.max_labels - static_cast<int>(positives.size()), 0);
  subsample_to_ignore(negatives, static_cast<size_t>(neg_budget), rng, out.labels);

  return out;
}

Box box_from_mask_axis_aligned(const BinaryMask& mask) {
  int r0 = mask.h, r1 = -1, c0 = mask.w, c1 = -1;
  for (int y = 0; y < mask.h; ++y) {
    for (int x = 0; x < mask.w; ++x) {
      if (mask.at(y, x) == 0) continue;
      r0 = std::min(r0, y);
      r1 = std::max(r1, y);
      c0 = std::min(c0, x);
      c1 = std::max(c1, x);
    }
  }
  if (r1 < 0) throw EmptyMaskError();
  return {(c0 + c1) / 2.0, (r0 + r1) / 2.0, static_cast<double>(c1 - c0 + 1),
          static_cast<double>(r1 - r0 + 1)};
}

namespace {

using Pt = std::array<double, 2>;

double cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain; returns hull in counter-clockwise order (math
// convention on raw coordinates).
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Pt> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  const size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

RotatedBox box_from_mask_min_area(const BinaryMask& mask) {
  // Corners of boundary pixels are enough: interior pixel corners cannot be
  // hull vertices.
  std::vector<Pt> pts;
  bool any = false;
  for (int y = 0; y < mask.h; ++y) {
    for (int x = 0; x < mask.w; ++x) {
      if (mask.at(y, x) == 0) continue;
      any = true;
      const bool boundary = y == 0 || y == mask.h - 1 || x == 0 || x == mask.w - 1 ||
                            mask.at(y - 1, x) == 0 || mask.at(y + 1, x) == 0 ||
                            mask.at(y, x - 1) == 0 || mask.at(y, x + 1) == 0;
      if (!boundary) continue;
      pts.push_back({x - 0.5, y - 0.5});
      pts.push_back({x + 0.5, y - 0.5});
      pts.push_back({x - 0.5, y + 0.5});
      pts.push_back({x + 0.5, y + 0.5});
    }
  }
  if (!any) throw EmptyMaskError();

  const std::vector<Pt> hull = convex_hull(std::move(pts));

  // The minimum-area enclosing rectangle has a side collinear with some hull
  // edge; try each edge orientation.
  double best_area = std::numeric_limits<double>::infinity();
  double bu0 = 0, bu1 = 0, bv0 = 0, bv1 = 0, bux = 1, buy = 0;
  const size_t h = hull.size();
  for (size_t i = 0; i < h; ++i) {
    const Pt& p = hull[i];
    const Pt& q = hull[(i + 1) % h];
    const double ex = q[0] - p[0];
    const double ey = q[1] - p[1];
    const double len = std::hypot(ex, ey);
    if (len < 1e-12) continue;
    const double ux = ex / len, uy = ey / len;  // edge direction; normal (-uy, ux)
    double u0 = std::numeric_limits<double>::infinity(), u1 = -u0;
    double v0 = u0, v1 = -u0;
    for (const Pt& pt : hull) {
      const double u = pt[0] * ux + pt[1] * uy;
      const double v = -pt[0] * uy + pt[1] * ux;
      u0 = std::min(u0, u);
      u1 = std::max(u1, u);
      v0 = std::min(v0, v);
      v1 = std::max(v1, v);
    }
    const double area = (u1 - u0) * (v1 - v0);
    if (area < best_area) {
      best_area = area;
      bu0 = u0; bu1 = u1; bv0 = v0; bv1 = v1;
      bux = ux; buy = uy;
    }
  }

  auto to_xy = [&](double u, double v) -> Pt {
    return {u * bux - v * buy, u * buy + v * bux};
  };
  RotatedBox rb;
  rb.corners[0] = to_xy(bu0, bv0);
  rb.corners[1] = to_xy(bu1, bv0);
  rb.corners[2] = to_xy(bu1, bv1);
  rb.corners[3] = to_xy(bu0, bv1);
  return rb;
}

Box bounding_box(const RotatedBox& rb) {
  double x0 = rb.corners[0][0], x1 = x0, y0 = rb.corners[0][1], y1 = y0;
  for (const auto& p : rb.corners) {
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]);
    y1 = std::max(y1, p[1]);
  }
  return {(x0 + x1) / 2.0, (y0 + y1) / 2.0, x1 - x0, y1 - y0};
}

}  // namespace cycletrack
