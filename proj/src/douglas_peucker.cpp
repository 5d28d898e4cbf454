#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "cellshape/error.hpp"
#include "cellshape/geometry.hpp"
#include "cellshape/polygon.hpp"

namespace cellshape::poly {
namespace {

double segment_distance(Point2d p, Point2d a, Point2d b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return std::hypot(p.x - a.x, p.y - a.y);
  const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

// Farthest-apart pair (i < j); only hull vertices can realize the diameter.
std::pair<std::size_t, std::size_t> farthest_pair(const std::vector<Point2d>& pts) {
  std::vector<std::size_t> candidates;
  try {
    const auto hull = geom::convex_hull(pts);
    auto less = [](Point2d a, Point2d b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
    std::set<Point2d, decltype(less)> corners(hull.begin(), hull.end(), less);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (corners.count(pts[i]) != 0) candidates.push_back(i);
    }
  } catch (const DegenerateError&) {
    candidates.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) candidates[i] = i;
  }
  std::pair<std::size_t, std::size_t> best{0, pts.size() > 1 ? 1 : 0};
  double best_d = -1.0;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      const Point2d p = pts[candidates[a]];
      const Point2d q = pts[candidates[b]];
      const double d = (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
      if (d > best_d) {
        best_d = d;
        best = {candidates[a], candidates[b]};
      }
    }
  }
  return best;
}

// Simplifies the chain first..last (unwrapped indices, modulo n) and marks kept points.
void simplify_chain(const std::vector<Point2d>& pts, std::size_t first, std::size_t last, double epsilon,
                    std::vector<bool>& keep) {
  const std::size_t n = pts.size();
  std::vector<std::pair<std::size_t, std::size_t>> stack{{first, last}};
  while (!stack.empty()) {
    const auto [a, b] = stack.back();
    stack.pop_back();
    if (b <= a + 1) continue;
    const Point2d pa = pts[a % n];
    const Point2d pb = pts[b % n];
    double max_d = -1.0;
    std::size_t max_k = a;
    for (std::size_t k = a + 1; k < b; ++k) {
      const double d = segment_distance(pts[k % n], pa, pb);
      if (d > max_d) {
        max_d = d;
        max_k = k;
      }
    }
    if (max_d > epsilon) {
      keep[max_k % n] = true;
      stack.push_back({max_k, b});
      stack.push_back({a, max_k});
    }
  }
}

}  // namespace

std::string_view method_name(Method method) {
  return method == Method::douglas_peucker ? "douglas_peucker" : "mpp";
}

PolyApprox douglas_peucker(const Contour& contour, double epsilon) {
  if (!(epsilon >= 0.0)) throw Error("Douglas-Peucker epsilon must be non-negative");
  const auto pts = geom::to_real(contour.points);
  const std::size_t n = pts.size();
  if (n < 3) throw DegenerateError("Douglas-Peucker needs at least three points");

  PolyApprox out;
  out.method = Method::douglas_peucker;
  out.param = epsilon;
  std::vector<bool> keep(n, false);
  if (epsilon == 0.0) {
    std::fill(keep.begin(), keep.end(), true);
  } else {
    const auto [i, j] = farthest_pair(pts);
    keep[i] = keep[j] = true;
    simplify_chain(pts, i, j, epsilon, keep);
    simplify_chain(pts, j, i + n, epsilon, keep);
    if (std::count(keep.begin(), keep.end(), true) < 3) {
      // Both chains collapsed onto the diameter; retain the point farthest from it.
      double max_d = 0.0;
      std::size_t max_k = n;
      for (std::size_t k = 0; k < n; ++k) {
        const double d = segment_distance(pts[k], pts[i], pts[j]);
        if (d > max_d) {
          max_d = d;
          max_k = k;
        }
      }
      if (max_k == n) throw DegenerateError("contour is a line segment");
      keep[max_k] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!keep[k]) continue;
    out.vertices.push_back(pts[k]);
    out.source_indices.push_back(k);
  }
  return out;
}

PolygonMetrics polygon_metrics(const PolyApprox& approx, const Contour& contour) {
  const double perim = geom::polygon_perimeter(contour);
  const double area = geom::polygon_area(contour);
  if (!(perim > 0.0) || !(area > 0.0) || contour.points.empty()) {
    throw DegenerateError("polygon metrics of a degenerate contour");
  }
  PolygonMetrics m;
  m.n_vertices = approx.vertices.size();
  m.perimeter_ratio = geom::polygon_perimeter(approx.vertices) / perim;
  m.area_ratio = geom::polygon_area(approx.vertices) / area;
  m.compression = static_cast<double>(m.n_vertices) / static_cast<double>(contour.points.size());
  return m;
}

}  // namespace cellshape::poly
