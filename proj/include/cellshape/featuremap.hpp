#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cellshape/geometry.hpp"
#include "cellshape/types.hpp"

namespace cellshape::featuremap {

enum class Overlay {
  reference,
  centroid_rays,
  hull_polygon,
  mbr_box,
  mpp_polygon,
  dp_polygon,
  curvature_colored_boundary,
  signature_plot,
};

std::string_view overlay_name(Overlay kind);

struct Panel {
  std::string caption;
  Overlay kind;
};

/// Panels are laid out row-major, `columns` per row; each tile has the size
/// of the source image. The first panel must be the plain reference mask.
struct FeatureMapSpec {
  std::vector<Panel> panels;
  int columns = 4;
};

/// reference, centroid distance rays, convex hull, minimum bounding
/// rectangle, Douglas-Peucker, MPP, curvature-coloured boundary and the
/// centroid distance signature plot.
FeatureMapSpec default_spec();

/// Geometry of the largest ROI that the overlays draw.
struct RoiOverlay {
  Contour contour;
  Point2d centroid;
  std::vector<Point2d> samples;
  std::vector<double> curvature;
  std::vector<double> centroid_distance;
  std::vector<Point2d> hull;
  geom::MbrResult mbr;
  std::vector<Point2d> dp;
  /// Empty when the ROI is too thin for the MPP grid.
  std::vector<Point2d> mpp;
};

RoiOverlay describe_roi(const Contour& contour, std::size_t n_samples, double dp_epsilon, int mpp_cell);

/// Throws Error when the spec is empty or does not start with the reference panel.
void validate(const FeatureMapSpec& spec);

/// PNG bytes of the panel grid: width = columns * image width,
/// height = rows * image height.
std::vector<std::uint8_t> render_feature_map(const BinaryMask& mask, const RoiOverlay& roi, const FeatureMapSpec& spec);

}  // namespace cellshape::featuremap
