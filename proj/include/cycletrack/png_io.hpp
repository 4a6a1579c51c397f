#pragma once

#include <array>
#include <string>

#include "cycletrack/image.hpp"

namespace cycletrack {

// Decodes a PNG or JPEG file (by extension) into an RGB image in [0,1].
Image read_image(const std::string& path);

// 8-bit RGB PNG.
void write_image_png(const std::string& path, const Image& img);

// Paletted instance mask. Reading returns the palette indices; grayscale
// files are accepted with pixel values as ids. Writing emits an 8-bit
// paletted PNG using the standard VOC colour map, so index round-trips are
// lossless.
IndexMask read_index_mask(const std::string& path);
void write_index_mask_png(const std::string& path, const IndexMask& mask);

// VOC/DAVIS colour map entry for an instance id.
std::array<uint8_t, 3> instance_palette_color(int id);

}  // namespace cycletrack
