#pragma once

#include <cstdint>
#include <vector>

#include "nnic/common.hpp"

namespace nnic {

// Per-pixel decoded/not-decoded state, stored on the 4x4 grid all coding
// blocks align to. Out-of-frame queries report not decoded.
class DecodedMask {
 public:
  DecodedMask() = default;
  DecodedMask(int width, int height)
      : width_(width), height_(height), cells_w_(width / 4),
        cells_(static_cast<size_t>(width / 4) * (height / 4), 0) {
    if (width % 4 != 0 || height % 4 != 0) {
      throw ContractError("DecodedMask dimensions must be multiples of 4");
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }

  bool decoded(int x, int y) const {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return false;
    return cells_[static_cast<size_t>(y / 4) * cells_w_ + x / 4] != 0;
  }

  void mark(int x, int y, int w, int h) { fill(x, y, w, h, 1); }
  void clear(int x, int y, int w, int h) { fill(x, y, w, h, 0); }
  void mark_all() { std::fill(cells_.begin(), cells_.end(), uint8_t{1}); }

 private:
  void fill(int x, int y, int w, int h, uint8_t v) {
    for (int cy = y / 4; cy < (y + h) / 4; ++cy) {
      for (int cx = x / 4; cx < (x + w) / 4; ++cx) {
        cells_[static_cast<size_t>(cy) * cells_w_ + cx] = v;
      }
    }
  }

  int width_ = 0;
  int height_ = 0;
  int cells_w_ = 0;
  std::vector<uint8_t> cells_;
};

}  // namespace nnic
