#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nnic/common.hpp"

namespace nnic {

// 8-bit grayscale raster, row-major.
struct LuminancePlane {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> samples;

  LuminancePlane() = default;
  LuminancePlane(int w, int h, uint8_t fill = 0)
      : width(w), height(h), samples(static_cast<size_t>(w) * h, fill) {}

  uint8_t at(int x, int y) const {
    return samples[static_cast<size_t>(y) * width + x];
  }
  uint8_t& at(int x, int y) {
    return samples[static_cast<size_t>(y) * width + x];
  }
  bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width && y < height;
  }
  bool operator==(const LuminancePlane&) const = default;
};

struct Corpus {
  // (image identifier, plane), ordered lexicographically by identifier.
  std::vector<std::pair<std::string, LuminancePlane>> entries;
};

LuminancePlane load_pgm(const std::string& path);
void save_pgm(const LuminancePlane& plane, const std::string& path);

// P6 PPM loaded straight to luminance via rgb_to_luma.
LuminancePlane load_ppm_luma(const std::string& path);

int rgb_to_luma(int r, int g, int b);

// 10*log10(peak^2 / MSE); +infinity when the planes are identical.
double psnr(const LuminancePlane& a, const LuminancePlane& b, int peak = 255);

uint64_t plane_hash(const LuminancePlane& plane);

// Right/bottom edge replication up to the next multiple of `multiple`.
LuminancePlane pad_to_multiple(const LuminancePlane& plane, int multiple);
LuminancePlane crop(const LuminancePlane& plane, int width, int height);

// Loads every *.pgm in a directory, sorted by identifier (filename stem).
Corpus load_corpus(const std::string& dir);

}  // namespace nnic
