#pragma once

#include <array>
#include <span>
#include <vector>

#include "cellshape/types.hpp"

namespace cellshape::geom {

std::vector<Point2d> to_real(std::span<const Point> points);

/// Shoelace sum over the closed polygon; positive for the outer-contour orientation.
double signed_area(std::span<const Point2d> polygon);
double polygon_area(std::span<const Point2d> polygon);
double polygon_area(const Contour& contour);

/// Sum of edge lengths including the closing edge.
double polygon_perimeter(std::span<const Point2d> polygon);
double polygon_perimeter(const Contour& contour);

/// Area-weighted polygon centroid. Throws DegenerateError for zero area.
Point2d centroid(std::span<const Point2d> polygon);
Point2d centroid(const Contour& contour);

/// 4 pi A / P^2, clipped to [0, 1.05].
double circularity(double area, double perimeter);

/// sqrt(1 - l2 / l1) from the central second moments of a pixel set.
double eccentricity(std::span<const Point> pixels);

/// Pixels of one region, in raster order.
std::vector<Point> region_pixels(const LabeledMask& labeled, int label);

/// Andrew's monotone chain. Counter-clockwise in the (x, y) frame, no
/// collinear vertices. Throws DegenerateError when all points are collinear.
std::vector<Point2d> convex_hull(std::span<const Point2d> points);
std::vector<Point2d> convex_hull(const Contour& contour);

double solidity(double contour_area, std::span<const Point2d> hull);
double convexity(double contour_perimeter, std::span<const Point2d> hull);

struct MbrResult {
  double width = 0.0;      // longer side
  double height = 0.0;     // shorter side
  double angle_deg = 0.0;  // direction of the longer side, [0, 180)
  Point2d center;

  double area() const { return width * height; }
  std::array<Point2d, 4> corners() const;
};

/// Rotating calipers over the hull edges; minimum-area rectangle, equal
/// areas resolved to the smaller normalized angle.
MbrResult min_bounding_rect(std::span<const Point2d> hull);

double rectangularity(double area, const MbrResult& mbr);
double elongation(const MbrResult& mbr);

/// Mean squared curvature of the arc-length resampled boundary.
double average_bending_energy(const Contour& contour, std::size_t n_samples);

struct HoleSummary {
  int euler_number = 1;
  double hole_area_ratio = 0.0;
};

HoleSummary euler_and_holes(const Contour& outer, std::span<const Contour> holes);

struct GeomFeatures {
  double area = 0.0;
  double perimeter = 0.0;
  Point2d centroid;
  double circularity = 0.0;
  double eccentricity = 0.0;
  double solidity = 0.0;
  double convexity = 0.0;
  double rectangularity = 0.0;
  double elongation = 0.0;
  double abe = 0.0;
  int euler_number = 1;
  double hole_area_ratio = 0.0;
  MbrResult mbr;
};

/// All geometric descriptors of one region. `pixels` feeds the moment-based
/// eccentricity; the rest is computed from the contours.
GeomFeatures compute_geometric_features(const Contour& outer, std::span<const Contour> holes,
                                        std::span<const Point> pixels, std::size_t n_samples);

}  // namespace cellshape::geom
