#include "cellshape/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cellshape/error.hpp"
#include "cellshape/signatures.hpp"

namespace cellshape::geom {
namespace {

double cross(Point2d o, Point2d a, Point2d b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double normalize_degrees(double deg) {
  deg = std::fmod(deg, 180.0);
  if (deg < 0.0) deg += 180.0;
  if (180.0 - deg < 1e-9 || deg < 1e-9) deg = 0.0;
  return deg;
}

}  // namespace

std::vector<Point2d> to_real(std::span<const Point> points) {
  std::vector<Point2d> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(cellshape::to_real(p));
  return out;
}

double signed_area(std::span<const Point2d> polygon) {
  const std::size_t n = polygon.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2d a = polygon[i];
    const Point2d b = polygon[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

double polygon_area(std::span<const Point2d> polygon) { return std::abs(signed_area(polygon)); }
double polygon_area(const Contour& contour) { return polygon_area(to_real(contour.points)); }

double polygon_perimeter(std::span<const Point2d> polygon) {
  const std::size_t n = polygon.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2d a = polygon[i];
    const Point2d b = polygon[(i + 1) % n];
    sum += std::hypot(b.x - a.x, b.y - a.y);
  }
  return sum;
}

double polygon_perimeter(const Contour& contour) { return polygon_perimeter(to_real(contour.points)); }

Point2d centroid(std::span<const Point2d> polygon) {
  const std::size_t n = polygon.size();
  double twice_area = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2d a = polygon[i];
    const Point2d b = polygon[(i + 1) % n];
    const double c = a.x * b.y - b.x * a.y;
    twice_area += c;
    cx += (a.x + b.x) * c;
    cy += (a.y + b.y) * c;
  }
  if (twice_area == 0.0) throw DegenerateError("centroid of a zero-area polygon");
  return {cx / (3.0 * twice_area), cy / (3.0 * twice_area)};
}

Point2d centroid(const Contour& contour) { return centroid(to_real(contour.points)); }

double circularity(double area, double perimeter) {
  if (!(perimeter > 0.0)) throw DegenerateError("circularity needs a positive perimeter");
  return std::clamp(4.0 * std::numbers::pi * area / (perimeter * perimeter), 0.0, 1.05);
}

double eccentricity(std::span<const Point> pixels) {
  if (pixels.size() < 2) throw DegenerateError("eccentricity needs at least two pixels");
  double mx = 0.0;
  double my = 0.0;
  for (const auto& p : pixels) {
    mx += p.x;
    my += p.y;
  }
  const auto count = static_cast<double>(pixels.size());
  mx /= count;
  my /= count;
  double mu20 = 0.0;
  double mu02 = 0.0;
  double mu11 = 0.0;
  for (const auto& p : pixels) {
    const double dx = p.x - mx;
    const double dy = p.y - my;
    mu20 += dx * dx;
    mu02 += dy * dy;
    mu11 += dx * dy;
  }
  mu20 /= count;
  mu02 /= count;
  mu11 /= count;
  const double mid = 0.5 * (mu20 + mu02);
  const double spread = std::hypot(0.5 * (mu20 - mu02), mu11);
  const double l1 = mid + spread;
  const double l2 = std::max(0.0, mid - spread);
  if (!(l1 > 0.0)) throw DegenerateError("eccentricity of a single point");
  return std::sqrt(std::max(0.0, 1.0 - l2 / l1));
}

std::vector<Point> region_pixels(const LabeledMask& labeled, int label) {
  std::vector<Point> out;
  for (int y = 0; y < labeled.height; ++y) {
    for (int x = 0; x < labeled.width; ++x) {
      if (labeled.at(x, y) == label) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<Point2d> convex_hull(std::span<const Point2d> points) {
  std::vector<Point2d> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point2d a, Point2d b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw DegenerateError("convex hull needs three distinct points");

  std::vector<Point2d> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DegenerateError("all points are collinear");
  return hull;
}

std::vector<Point2d> convex_hull(const Contour& contour) { return convex_hull(to_real(contour.points)); }

double solidity(double contour_area, std::span<const Point2d> hull) {
  const double hull_area = polygon_area(hull);
  if (!(hull_area > 0.0)) throw DegenerateError("hull has zero area");
  return contour_area / hull_area;
}

double convexity(double contour_perimeter, std::span<const Point2d> hull) {
  if (!(contour_perimeter > 0.0)) throw DegenerateError("contour has zero perimeter");
  if (!(polygon_area(hull) > 0.0)) throw DegenerateError("hull has zero area");
  return polygon_perimeter(hull) / contour_perimeter;
}

std::array<Point2d, 4> MbrResult::corners() const {
  const double a = angle_deg * std::numbers::pi / 180.0;
  const Point2d u{std::cos(a) * width / 2.0, std::sin(a) * width / 2.0};
  const Point2d v{-std::sin(a) * height / 2.0, std::cos(a) * height / 2.0};
  return {Point2d{center.x - u.x - v.x, center.y - u.y - v.y}, Point2d{center.x + u.x - v.x, center.y + u.y - v.y},
          Point2d{center.x + u.x + v.x, center.y + u.y + v.y}, Point2d{center.x - u.x + v.x, center.y - u.y + v.y}};
}

MbrResult min_bounding_rect(std::span<const Point2d> hull) {
  const std::size_t n = hull.size();
  if (n < 3 || !(polygon_area(hull) > 0.0)) throw DegenerateError("minimum bounding rectangle of a degenerate hull");

  bool have = false;
  MbrResult best;
  double best_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2d a = hull[i];
    const Point2d b = hull[(i + 1) % n];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (len == 0.0) continue;
    const Point2d u{(b.x - a.x) / len, (b.y - a.y) / len};
    const Point2d v{-u.y, u.x};
    double umin = INFINITY, umax = -INFINITY, vmin = INFINITY, vmax = -INFINITY;
    for (const auto& p : hull) {
      const double pu = p.x * u.x + p.y * u.y;
      const double pv = p.x * v.x + p.y * v.y;
      umin = std::min(umin, pu);
      umax = std::max(umax, pu);
      vmin = std::min(vmin, pv);
      vmax = std::max(vmax, pv);
    }
    const double along_u = umax - umin;
    const double along_v = vmax - vmin;
    MbrResult cand;
    const double angle_u = normalize_degrees(std::atan2(u.y, u.x) * 180.0 / std::numbers::pi);
    const double angle_v = normalize_degrees(std::atan2(v.y, v.x) * 180.0 / std::numbers::pi);
    if (std::abs(along_u - along_v) <= 1e-9 * std::max(along_u, along_v)) {
      cand.width = cand.height = std::max(along_u, along_v);
      cand.angle_deg = std::min(angle_u, angle_v);
    } else if (along_u > along_v) {
      cand.width = along_u;
      cand.height = along_v;
      cand.angle_deg = angle_u;
    } else {
      cand.width = along_v;
      cand.height = along_u;
      cand.angle_deg = angle_v;
    }
    const double cu = 0.5 * (umin + umax);
    const double cv = 0.5 * (vmin + vmax);
    cand.center = {cu * u.x + cv * v.x, cu * u.y + cv * v.y};
    const double area = along_u * along_v;
    const double tol = 1e-9 * std::max(area, best_area);
    if (!have || area < best_area - tol || (area <= best_area + tol && cand.angle_deg < best.angle_deg)) {
      best = cand;
      best_area = area;
      have = true;
    }
  }
  if (!have) throw DegenerateError("minimum bounding rectangle of a degenerate hull");
  return best;
}

double rectangularity(double area, const MbrResult& mbr) {
  if (!(mbr.width > 0.0) || !(mbr.height > 0.0)) throw DegenerateError("bounding rectangle has no area");
  return area / (mbr.width * mbr.height);
}

double elongation(const MbrResult& mbr) {
  if (!(mbr.width > 0.0)) throw DegenerateError("bounding rectangle has no width");
  return 1.0 - mbr.height / mbr.width;
}

double average_bending_energy(const Contour& contour, std::size_t n_samples) {
  const auto kappa = signature::curvature_function(contour, n_samples);
  double sum = 0.0;
  for (const double k : kappa.values) sum += k * k;
  return sum / static_cast<double>(kappa.values.size());
}

HoleSummary euler_and_holes(const Contour& outer, std::span<const Contour> holes) {
  HoleSummary out;
  out.euler_number = 1 - static_cast<int>(holes.size());
  const double outer_area = polygon_area(outer);
  if (holes.empty() || !(outer_area > 0.0)) return out;
  double hole_area = 0.0;
  for (const auto& h : holes) hole_area += polygon_area(h);
  out.hole_area_ratio = hole_area / outer_area;
  return out;
}

GeomFeatures compute_geometric_features(const Contour& outer, std::span<const Contour> holes,
                                        std::span<const Point> pixels, std::size_t n_samples) {
  const auto poly = to_real(outer.points);
  GeomFeatures f;
  f.area = polygon_area(poly);
  f.perimeter = polygon_perimeter(poly);
  f.centroid = centroid(poly);
  f.circularity = circularity(f.area, f.perimeter);
  f.eccentricity = eccentricity(pixels);
  const auto hull = convex_hull(poly);
  f.solidity = solidity(f.area, hull);
  f.convexity = convexity(f.perimeter, hull);
  f.mbr = min_bounding_rect(hull);
  f.rectangularity = rectangularity(f.area, f.mbr);
  f.elongation = elongation(f.mbr);
  f.abe = average_bending_energy(outer, n_samples);
  const auto holes_summary = euler_and_holes(outer, holes);
  f.euler_number = holes_summary.euler_number;
  f.hole_area_ratio = holes_summary.hole_area_ratio;
  return f;
}

}  // namespace cellshape::geom
