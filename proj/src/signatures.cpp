#include "cellshape/signatures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cellshape/error.hpp"
#include "cellshape/geometry.hpp"

namespace cellshape::signature {
namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
  // (-pi, pi]
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

double cross(Point2d o, Point2d a, Point2d b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

struct Sampled {
  std::vector<Point2d> points;
  double perimeter = 0.0;
  Point2d centroid;
};

void require_samples(std::size_t n) {
  if (n < 8) throw Error("signatures need at least 8 samples, got " + std::to_string(n));
}

Sampled sample(std::span<const Point2d> polygon, std::size_t n) {
  require_samples(n);
  return Sampled{resample_equal_arclength(polygon, n), geom::polygon_perimeter(polygon), geom::centroid(polygon)};
}

std::size_t wrap_index(long i, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

// Raw (wrapped) tangent directions from a central difference.
std::vector<double> raw_tangents(const std::vector<Point2d>& p) {
  const std::size_t n = p.size();
  const long w = static_cast<long>(std::max<std::size_t>(1, n / 32));
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Point2d a = p[wrap_index(static_cast<long>(k) - w, n)];
    const Point2d b = p[wrap_index(static_cast<long>(k) + w, n)];
    out[k] = std::atan2(b.y - a.y, b.x - a.x);
  }
  return out;
}

ShapeSignature cdf(const Sampled& s) {
  ShapeSignature sig{Kind::centroid_distance, {}};
  sig.values.reserve(s.points.size());
  for (const auto& q : s.points) sig.values.push_back(std::hypot(q.x - s.centroid.x, q.y - s.centroid.y));
  return sig;
}

ShapeSignature tangent(const Sampled& s) {
  const auto raw = raw_tangents(s.points);
  ShapeSignature sig{Kind::tangent_angle, std::vector<double>(raw.size())};
  sig.values[0] = raw[0];
  for (std::size_t k = 1; k < raw.size(); ++k) sig.values[k] = sig.values[k - 1] + wrap_angle(raw[k] - raw[k - 1]);
  return sig;
}

ShapeSignature curvature(const Sampled& s) {
  const auto raw = raw_tangents(s.points);
  const std::size_t n = raw.size();
  const double step = s.perimeter / static_cast<double>(n);
  ShapeSignature sig{Kind::curvature, std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) sig.values[k] = wrap_angle(raw[(k + 1) % n] - raw[k]) / step;
  return sig;
}

ShapeSignature area_fn(const Sampled& s) {
  const std::size_t n = s.points.size();
  ShapeSignature sig{Kind::area_function, std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    sig.values[k] = 0.5 * std::abs(cross(s.centroid, s.points[k], s.points[(k + 1) % n]));
  }
  return sig;
}

ShapeSignature chord(const Sampled& s) {
  const std::size_t n = s.points.size();
  if (n % 2 != 0) throw Error("chord-length signature needs an even sample count");
  ShapeSignature sig{Kind::chord_length, std::vector<double>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    const Point2d a = s.points[k];
    const Point2d b = s.points[(k + n / 2) % n];
    sig.values[k] = std::hypot(b.x - a.x, b.y - a.y);
  }
  return sig;
}

ShapeSignature tar(const Sampled& s, std::size_t ts) {
  const std::size_t n = s.points.size();
  if (ts == 0) ts = n / 8;
  if (ts < 1 || 2 * ts >= n) throw Error("triangle-area offset must satisfy 1 <= ts < n/2");
  ShapeSignature sig{Kind::triangle_area, std::vector<double>(n)};
  const long off = static_cast<long>(ts);
  for (std::size_t k = 0; k < n; ++k) {
    const Point2d a = s.points[wrap_index(static_cast<long>(k) - off, n)];
    const Point2d c = s.points[wrap_index(static_cast<long>(k) + off, n)];
    sig.values[k] = 0.5 * cross(a, s.points[k], c);
  }
  return sig;
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::centroid_distance: return "centroid_distance";
    case Kind::tangent_angle: return "tangent_angle";
    case Kind::curvature: return "curvature";
    case Kind::area_function: return "area_function";
    case Kind::chord_length: return "chord_length";
    case Kind::triangle_area: return "triangle_area";
  }
  return "unknown";
}

std::vector<Point2d> resample_equal_arclength(std::span<const Point2d> polygon, std::size_t n) {
  if (n == 0) throw Error("resampling needs at least one sample");
  const std::size_t m = polygon.size();
  std::vector<double> cumulative(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const Point2d a = polygon[i];
    const Point2d b = polygon[(i + 1) % m];
    cumulative[i + 1] = cumulative[i] + std::hypot(b.x - a.x, b.y - a.y);
  }
  const double total = cumulative[m];
  if (m == 0 || !(total > 0.0)) throw DegenerateError("contour has zero perimeter");

  std::vector<Point2d> out;
  out.reserve(n);
  std::size_t seg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double target = total * static_cast<double>(k) / static_cast<double>(n);
    while (seg + 1 < m && cumulative[seg + 1] <= target) ++seg;
    const double len = cumulative[seg + 1] - cumulative[seg];
    const double t = len > 0.0 ? (target - cumulative[seg]) / len : 0.0;
    const Point2d a = polygon[seg];
    const Point2d b = polygon[(seg + 1) % m];
    out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
  }
  return out;
}

std::vector<Point2d> resample_equal_arclength(const Contour& contour, std::size_t n) {
  const auto real = geom::to_real(contour.points);
  return resample_equal_arclength(real, n);
}

ShapeSignature centroid_distance_function(std::span<const Point2d> polygon, std::size_t n) { return cdf(sample(polygon, n)); }
ShapeSignature tangent_angle_function(std::span<const Point2d> polygon, std::size_t n) { return tangent(sample(polygon, n)); }
ShapeSignature curvature_function(std::span<const Point2d> polygon, std::size_t n) { return curvature(sample(polygon, n)); }
ShapeSignature area_function(std::span<const Point2d> polygon, std::size_t n) { return area_fn(sample(polygon, n)); }
ShapeSignature chord_length_function(std::span<const Point2d> polygon, std::size_t n) { return chord(sample(polygon, n)); }
ShapeSignature triangle_area_signature(std::span<const Point2d> polygon, std::size_t n, std::size_t ts) {
  return tar(sample(polygon, n), ts);
}

ShapeSignature centroid_distance_function(const Contour& c, std::size_t n) { return centroid_distance_function(geom::to_real(c.points), n); }
ShapeSignature tangent_angle_function(const Contour& c, std::size_t n) { return tangent_angle_function(geom::to_real(c.points), n); }
ShapeSignature curvature_function(const Contour& c, std::size_t n) { return curvature_function(geom::to_real(c.points), n); }
ShapeSignature area_function(const Contour& c, std::size_t n) { return area_function(geom::to_real(c.points), n); }
ShapeSignature chord_length_function(const Contour& c, std::size_t n) { return chord_length_function(geom::to_real(c.points), n); }
ShapeSignature triangle_area_signature(const Contour& c, std::size_t n, std::size_t ts) {
  return triangle_area_signature(geom::to_real(c.points), n, ts);
}

std::vector<ShapeSignature> compute_signatures(const Contour& contour, std::size_t n) {
  const auto real = geom::to_real(contour.points);
  const Sampled s = sample(real, n);
  return {cdf(s), tangent(s), curvature(s), area_fn(s), chord(s), tar(s, 0)};
}

SignatureStats summarize_signature(const ShapeSignature& sig) {
  if (sig.values.empty()) throw Error("cannot summarize an empty signature");
  // Welford update
  double mean = 0.0;
  double m2 = 0.0;
  double lo = sig.values.front();
  double hi = sig.values.front();
  std::size_t count = 0;
  for (const double v : sig.values) {
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {mean, std::sqrt(std::max(0.0, m2 / static_cast<double>(count))), lo, hi};
}

}  // namespace cellshape::signature
