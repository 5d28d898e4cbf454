#pragma once

#include <string_view>
#include <vector>

#include "cellshape/types.hpp"

namespace cellshape::poly {

inline constexpr double kDefaultDpEpsilon = 2.0;
inline constexpr int kDefaultMppCell = 2;

enum class Method { douglas_peucker, mpp };

std::string_view method_name(Method method);

struct PolyApprox {
  std::vector<Point2d> vertices;
  Method method = Method::douglas_peucker;
  double param = 0.0;
  /// Douglas-Peucker only: index of each vertex in the source contour, ascending.
  std::vector<std::size_t> source_indices;
};

/// Closed-curve Douglas-Peucker. The contour is split at its farthest-apart
/// pair of points and each chain is simplified against the point-to-segment
/// distance; the farthest point is kept while its distance exceeds epsilon,
/// equal distances resolved to the lowest index. epsilon = 0 keeps every point.
PolyApprox douglas_peucker(const Contour& contour, double epsilon = kDefaultDpEpsilon);

/// Grid cellular complex behind the minimum perimeter polygon.
struct CellularBand {
  /// Inner wall corners in traversal order (positive orientation), pixel-center coordinates.
  std::vector<Point2d> inner_wall;
  /// true for convex corners, false for concave ones.
  std::vector<bool> convex;
  /// inner_wall with each concave corner moved one cell diagonally outward.
  std::vector<Point2d> candidates;
  int cell_size = 0;
};

/// Cells of side cell_size anchored at the contour's bounding-box origin; a
/// cell belongs to the complex when every pixel center it spans lies inside
/// the contour. Holes in the complex are filled and only the largest
/// 4-connected part is kept. Throws DegenerateError when no cell fits.
CellularBand cellular_band(const Contour& contour, int cell_size);

/// Minimum perimeter polygon through the cellular band (white/black
/// crawler sweep over the band candidates).
PolyApprox min_perimeter_polygon(const Contour& contour, int cell_size = kDefaultMppCell);

struct PolygonMetrics {
  std::size_t n_vertices = 0;
  double perimeter_ratio = 0.0;
  double area_ratio = 0.0;
  double compression = 0.0;
};

PolygonMetrics polygon_metrics(const PolyApprox& approx, const Contour& contour);

}  // namespace cellshape::poly
