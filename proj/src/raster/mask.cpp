#include <algorithm>
#include <string>

#include "cellshape/error.hpp"
#include "cellshape/types.hpp"

namespace cellshape {

BinaryMask::BinaryMask(int width, int height, std::string source_name)
    : BinaryMask(width, height,
                 std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(width, 0)) *
                                           static_cast<std::size_t>(std::max(height, 0))),
                 std::move(source_name)) {}

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> pixels, std::string source_name)
    : width_(width), height_(height), pixels_(std::move(pixels)), source_name_(std::move(source_name)) {
  if (width_ < 1 || height_ < 1) {
    throw Error("mask dimensions must be positive, got " + std::to_string(width_) + "x" +
                std::to_string(height_));
  }
  if (pixels_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_)) {
    throw Error("mask buffer length does not match its dimensions");
  }
  for (auto& p : pixels_) p = p != 0 ? 1 : 0;
}

std::size_t BinaryMask::foreground_count() const {
  return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), std::uint8_t{1}));
}

}  // namespace cellshape
