#include "synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <opencv2/imgcodecs.hpp>

#include "cellshape/raster.hpp"

namespace cellshape::testing {

BinaryMask disc(int width, int height, double cx, double cy, double r) {
  return ellipse(width, height, cx, cy, r, r);
}

BinaryMask ellipse(int width, int height, double cx, double cy, double a, double b, double angle_deg) {
  BinaryMask m(width, height);
  const double t = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(t), s = std::sin(t);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double dx = x - cx, dy = y - cy;
      const double u = c * dx + s * dy;
      const double v = -s * dx + c * dy;
      m.set(x, y, (u * u) / (a * a) + (v * v) / (b * b) <= 1.0);
    }
  }
  return m;
}

BinaryMask rotated_rect(int width, int height, double cx, double cy, double length, double breadth, double angle_deg) {
  BinaryMask m(width, height);
  const double t = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(t), s = std::sin(t);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double dx = x - cx, dy = y - cy;
      const double u = c * dx + s * dy;
      const double v = -s * dx + c * dy;
      m.set(x, y, std::abs(u) <= length / 2.0 && std::abs(v) <= breadth / 2.0);
    }
  }
  return m;
}

void fill_box(BinaryMask& mask, int x0, int y0, int x1, int y1, bool on) {
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) mask.set(x, y, on);
  }
}

BinaryMask box(int width, int height, int x0, int y0, int x1, int y1) {
  BinaryMask m(width, height);
  fill_box(m, x0, y0, x1, y1);
  return m;
}

BinaryMask random_blob(int width, int height, std::mt19937& rng, int count) {
  BinaryMask m(width, height);
  std::uniform_real_distribution<double> jitter(-0.18, 0.18);
  std::uniform_real_distribution<double> radius(0.08, 0.2);
  const double scale = std::min(width, height);
  std::vector<std::array<double, 3>> discs;
  double px = width / 2.0, py = height / 2.0;
  for (int i = 0; i < count; ++i) {
    const double r = radius(rng) * scale;
    discs.push_back({px, py, r});
    // Next disc overlaps the previous one so the union stays connected.
    const double ang = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
    px = std::clamp(px + 0.6 * r * std::cos(ang) + jitter(rng) * scale * 0.2, 0.3 * width, 0.7 * width);
    py = std::clamp(py + 0.6 * r * std::sin(ang) + jitter(rng) * scale * 0.2, 0.3 * height, 0.7 * height);
  }
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      for (const auto& d : discs) {
        if ((x - d[0]) * (x - d[0]) + (y - d[1]) * (y - d[1]) <= d[2] * d[2]) {
          m.set(x, y, true);
          break;
        }
      }
    }
  }
  return m;
}

BinaryMask random_mask(int width, int height, std::mt19937& rng, double density) {
  BinaryMask m(width, height);
  std::bernoulli_distribution on(density);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) m.set(x, y, on(rng));
  }
  return m;
}

BinaryMask polygon_mask(int width, int height, const std::vector<Point2d>& v) {
  BinaryMask m(width, height);
  const std::size_t n = v.size();
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      bool inside = false;
      for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        if (((v[i].y > y) != (v[j].y > y)) && (x < (v[j].x - v[i].x) * (y - v[i].y) / (v[j].y - v[i].y) + v[i].x)) {
          inside = !inside;
        }
      }
      m.set(x, y, inside);
    }
  }
  return m;
}

Contour first_outer_contour(const BinaryMask& mask) {
  for (auto& c : raster::trace_contours(raster::label_components(mask))) {
    if (!c.is_hole) return c;
  }
  throw std::runtime_error("mask has no contour");
}

void write_png(const BinaryMask& mask, const std::filesystem::path& path) {
  cv::Mat img(mask.height(), mask.width(), CV_8UC1);
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) img.at<std::uint8_t>(y, x) = mask.at(x, y) ? 255 : 0;
  }
  std::filesystem::create_directories(path.parent_path());
  if (!cv::imwrite(path.string(), img)) throw std::runtime_error("cannot write " + path.string());
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cellshape_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace cellshape::testing
