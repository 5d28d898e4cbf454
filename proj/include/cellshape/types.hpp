#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cellshape {

/// Integer pixel-center coordinate. x grows rightwards, y grows downwards.
struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Point2d {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2d&, const Point2d&) = default;
};

inline Point2d to_real(Point p) { return {static_cast<double>(p.x), static_cast<double>(p.y)}; }

/// Two-valued raster; stored as one byte per pixel holding 0 or 1.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height, std::string source_name = {});
  BinaryMask(int width, int height, std::vector<std::uint8_t> pixels, std::string source_name = {});

  int width() const { return width_; }
  int height() const { return height_; }
  const std::string& source_name() const { return source_name_; }
  void set_source_name(std::string name) { source_name_ = std::move(name); }

  bool at(int x, int y) const { return pixels_[index(x, y)] != 0; }
  void set(int x, int y, bool on) { pixels_[index(x, y)] = on ? 1 : 0; }
  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> pixels() { return pixels_; }
  std::size_t foreground_count() const;

  friend bool operator==(const BinaryMask& a, const BinaryMask& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.pixels_ == b.pixels_;
  }

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
  std::string source_name_;
};

/// Connected-component labels; 0 is background, regions are 1..num_regions.
struct LabeledMask {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> labels;
  int num_regions = 0;

  std::int32_t at(int x, int y) const {
    return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
  }
};

/// Closed boundary of one region (or of one hole inside a region).
/// Outer contours have positive signed shoelace area in the (x, y) frame, holes negative.
struct Contour {
  std::vector<Point> points;
  int region_label = 0;
  bool is_hole = false;

  std::size_t size() const { return points.size(); }
};

}  // namespace cellshape
