#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cycletrack/image.hpp"

namespace cycletrack {

// Axis-aligned box in frame pixels, center format.
struct Box {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;

  double x0() const { return cx - w / 2.0; }
  double x1() const { return cx + w / 2.0; }
  double y0() const { return cy - h / 2.0; }
  double y1() const { return cy + h / 2.0; }
  double area() const { return w * h; }
  bool valid() const;
};

// Convex quadrilateral given by 4 ordered corner points.
struct RotatedBox {
  std::array<std::array<double, 2>, 4> corners{};

  double area() const;  // shoelace, absolute value
};

// Eq-style normalized offsets between a box and its anchor.
struct BoxDelta {
  double tx = 0.0;
  double ty = 0.0;
  double tw = 0.0;
  double th = 0.0;
};

struct AnchorConfig {
  int k = 5;
  std::vector<double> ratios = {0.33, 0.5, 1.0, 2.0, 3.0};
  double scale = 8.0;
  int stride = 8;
  int grid_size = 25;
  int image_size = 255;  // search patch side, anchors live in its pixel coords
};

struct AnchorGrid {
  AnchorConfig config;
  std::vector<Box> anchors;  // grid*grid*k, flat index ((row*grid)+col)*k + a

  int count() const { return static_cast<int>(anchors.size()); }
  int positions() const { return config.grid_size * config.grid_size; }
  int flat_index(int row, int col, int a) const {
    return (row * config.grid_size + col) * config.k + a;
  }
  int position_of(int flat) const { return flat / config.k; }
  const Box& anchor(int flat) const { return anchors[flat]; }
};

enum class AnchorLabel : uint8_t { ignore = 0, positive = 1, negative = 2 };

// Caps applied after thresholding; surplus labels move to ignore, picked
// uniformly at random from the given seed. no_caps() disables capping.
struct LabelCaps {
  int max_positives = 16;
  int max_labels = 48;
  uint64_t seed = 0;

  static LabelCaps none() {
    return {std::numeric_limits<int>::max(), std::numeric_limits<int>::max(), 0};
  }
};

struct AnchorLabels {
  std::vector<AnchorLabel> labels;         // per anchor, after caps
  std::vector<BoxDelta> deltas;            // per anchor, meaningful where positive
  std::vector<uint8_t> position_positive;  // per lattice position, before caps
  bool promoted_fallback = false;  // no anchor cleared the positive threshold

  int count(AnchorLabel l) const;
};

struct EmptyMaskError : std::runtime_error {
  EmptyMaskError() : std::runtime_error("mask has no foreground pixels") {}
};

// Intersection-over-union of two axis-aligned boxes.
double iou(const Box& a, const Box& b);

AnchorGrid make_anchor_grid(const AnchorConfig& config);

BoxDelta encode_box(const Box& anchor, const Box& box);

// Inverse of encode_box. tw/th beyond +-clamp_log are clamped; *clamped is
// set when that happens.
Box decode_box(const Box& anchor, const BoxDelta& d, double clamp_log = 4.0,
               bool* clamped = nullptr);

// gt is expressed in the anchor grid's (search patch) coordinates.
AnchorLabels assign_anchor_labels(const AnchorGrid& grid, const Box& gt,
                                  const LabelCaps& caps, double pos_iou = 0.6,
                                  double neg_iou = 0.3);

// Tightest axis-aligned box covering all foreground pixels (pixel extents).
Box box_from_mask_axis_aligned(const BinaryMask& mask);

// Minimum-area enclosing rotated rectangle, rotating calipers over the convex
// hull of the foreground pixel corners.
RotatedBox box_from_mask_min_area(const BinaryMask& mask);

// Axis-aligned bounds of a rotated box.
Box bounding_box(const RotatedBox& rb);

}  // namespace cycletrack
