#include "cycletrack/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <vector>

#include <jpeglib.h>

namespace cycletrack {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f != nullptr) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  if (!f) throw std::runtime_error("cannot open file: " + path);
  return f;
}

bool has_suffix(const std::string& s, const char* suffix) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const size_t n = std::strlen(suffix);
  return lower.size() >= n && lower.compare(lower.size() - n, n, suffix) == 0;
}

// Reads raw 8-bit rows; `expand_rgb` controls whether palettes/gray expand to
// RGB (frames) or stay as raw indices (masks).
std::vector<std::vector<uint8_t>> read_png_rows(const std::string& path, bool expand_rgb,
                                                int* out_w, int* out_h, int* out_channels) {
  FilePtr f = open_file(path, "rb");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw std::runtime_error("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("failed to decode PNG: " + path);
  }

  png_init_io(png, f.get());
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  if (expand_rgb) {
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
      png_set_gray_to_rgb(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
  }
  if (png_get_bit_depth(png, info) == 16) png_set_strip_16(png);
  if (png_get_bit_depth(png, info) < 8) png_set_packing(png);
  png_read_update_info(png, info);

  const int w = static_cast<int>(png_get_image_width(png, info));
  const int h = static_cast<int>(png_get_image_height(png, info));
  const int channels = static_cast<int>(png_get_channels(png, info));
  const size_t rowbytes = png_get_rowbytes(png, info);

  std::vector<std::vector<uint8_t>> rows(h, std::vector<uint8_t>(rowbytes));
  std::vector<png_bytep> row_ptrs(h);
  for (int y = 0; y < h; ++y) row_ptrs[y] = rows[y].data();
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  *out_w = w;
  *out_h = h;
  *out_channels = channels;
  return rows;
}

struct JpegErrorMgr {
  jpeg_error_mgr pub;
  jmp_buf setjmp_buffer;
};

void jpeg_error_trampoline(j_common_ptr cinfo) {
  auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  longjmp(mgr->setjmp_buffer, 1);
}

Image read_jpeg(const std::string& path) {
  FilePtr f = open_file(path, "rb");
  jpeg_decompress_struct cinfo;
  JpegErrorMgr jerr;
  cinfo.err = jpeg_std_error(&jerr.pub);
  jerr.pub.error_exit = jpeg_error_trampoline;
  if (setjmp(jerr.setjmp_buffer)) {
    jpeg_destroy_decompress(&cinfo);
    throw std::runtime_error("failed to decode JPEG: " + path);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, f.get());
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);

  Image img(static_cast<int>(cinfo.output_height), static_cast<int>(cinfo.output_width));
  std::vector<uint8_t> row(static_cast<size_t>(img.w) * 3);
  uint8_t* rowp = row.data();
  for (int y = 0; y < img.h; ++y) {
    jpeg_read_scanlines(&cinfo, &rowp, 1);
    for (int x = 0; x < img.w; ++x)
      for (int ch = 0; ch < 3; ++ch) img.at(y, x, ch) = row[x * 3 + ch] / 255.0;
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return img;
}

uint8_t to_byte(double v) {
  const double s = std::clamp(v, 0.0, 1.0) * 255.0 + 0.5;
  return static_cast<uint8_t>(s);
}

}  // namespace

Image read_image(const std::string& path) {
  if (has_suffix(path, ".jpg") || has_suffix(path, ".jpeg")) return read_jpeg(path);
  int w = 0, h = 0, channels = 0;
  const auto rows = read_png_rows(path, /*expand_rgb=*/true, &w, &h, &channels);
  if (channels != 3) throw std::runtime_error("unexpected channel count in " + path);
  Image img(h, w);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int ch = 0; ch < 3; ++ch) img.at(y, x, ch) = rows[y][x * 3 + ch] / 255.0;
  return img;
}

void write_image_png(const std::string& path, const Image& img) {
  FilePtr f = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("failed to write PNG: " + path);
  }

  png_init_io(png, f.get());
  png_set_IHDR(png, info, img.w, img.h, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  std::vector<uint8_t> row(static_cast<size_t>(img.w) * 3);
  for (int y = 0; y < img.h; ++y) {
    for (int x = 0; x < img.w; ++x)
      for (int ch = 0; ch < 3; ++ch) row[x * 3 + ch] = to_byte(img.at(y, x, ch));
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

std::array<uint8_t, 3> instance_palette_color(int id) {
  // Standard VOC bit-reversal colour map.
  std::array<uint8_t, 3> rgb = {0, 0, 0};
  int v = id;
  for (int shift = 7; shift >= 0 && v != 0; --shift) {
    rgb[0] |= static_cast<uint8_t>(((v >> 0) & 1) << shift);
    rgb[1] |= static_cast<uint8_t>(((v >> 1) & 1) << shift);
    rgb[2] |= static_cast<uint8_t>(((v >> 2) & 1) << shift);
    v >>= 3;
  }
  return rgb;
}

IndexMask read_index_mask(const std::string& path) {
  int w = 0, h = 0, channels = 0;
  const auto rows = read_png_rows(path, /*expand_rgb=*/false, &w, &h, &channels);
  if (channels != 1)
    throw std::runtime_error("mask PNG must be paletted or grayscale: " + path);
  IndexMask mask(h, w);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) mask.at(y, x) = rows[y][x];
  return mask;
}

void write_index_mask_png(const std::string& path, const IndexMask& mask) {
  FilePtr f = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw std::runtime_error("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw std::runtime_error("failed to write PNG: " + path);
  }

  png_init_io(png, f.get());
  png_set_IHDR(png, info, mask.w, mask.h, 8, PNG_COLOR_TYPE_PALETTE, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);

  std::array<png_color, 256> palette;
  for (int i = 0; i < 256; ++i) {
    const auto rgb = instance_palette_color(i);
    palette[i] = {rgb[0], rgb[1], rgb[2]};
  }
  png_set_PLTE(png, info, palette.data(), 256);
  png_write_info(png, info);

  std::vector<uint8_t> row(mask.w);
  for (int y = 0; y < mask.h; ++y) {
    for (int x = 0; x < mask.w; ++x) row[x] = mask.at(y, x);
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace cycletrack
