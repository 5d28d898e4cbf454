#include "cellshape/featuremap.hpp"

#include <algorithm>
#include <cmath>

#include <opencv2/imgproc.hpp>

#include "cellshape/error.hpp"
#include "cellshape/polygon.hpp"
#include "cellshape/signatures.hpp"
#include "render_util.hpp"

namespace cellshape::featuremap {
namespace {

// BGR palette
const cv::Scalar kRay(255, 160, 0);
const cv::Scalar kHull(0, 200, 0);
const cv::Scalar kMbr(0, 140, 255);
const cv::Scalar kDp(255, 0, 255);
const cv::Scalar kMpp(0, 0, 230);
const cv::Scalar kCentroid(0, 0, 255);
const cv::Scalar kCaption(255, 255, 255);
const cv::Scalar kQuartile[4] = {cv::Scalar(255, 80, 0), cv::Scalar(0, 200, 0), cv::Scalar(0, 220, 255),
                                 cv::Scalar(0, 0, 255)};

cv::Point px(Point2d p) { return {static_cast<int>(std::lround(p.x)), static_cast<int>(std::lround(p.y))}; }

void draw_polygon(cv::Mat& img, const std::vector<Point2d>& poly, const cv::Scalar& color, int thickness) {
  if (poly.size() < 2) return;
  std::vector<cv::Point> pts;
  pts.reserve(poly.size());
  for (const auto& p : poly) pts.push_back(px(p));
  cv::polylines(img, pts, true, color, thickness, cv::LINE_8);
}

// Dimmed mask so overlays stand out.
cv::Mat backdrop(const BinaryMask& mask) {
  cv::Mat img = detail::mask_to_bgr(mask);
  img *= 0.45;
  return img;
}

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

void draw_tile(cv::Mat& tile, const BinaryMask& mask, const RoiOverlay& roi, Overlay kind, int thickness) {
  switch (kind) {
    case Overlay::reference:
      tile = detail::mask_to_bgr(mask);
      return;
    case Overlay::centroid_rays:
      tile = backdrop(mask);
      for (const auto& s : roi.samples) cv::line(tile, px(roi.centroid), px(s), kRay, 1, cv::LINE_8);
      cv::circle(tile, px(roi.centroid), 2 * thickness, kCentroid, cv::FILLED, cv::LINE_8);
      return;
    case Overlay::hull_polygon:
      tile = backdrop(mask);
      draw_polygon(tile, roi.hull, kHull, thickness);
      return;
    case Overlay::mbr_box: {
      tile = backdrop(mask);
      const auto c = roi.mbr.corners();
      draw_polygon(tile, {c.begin(), c.end()}, kMbr, thickness);
      return;
    }
    case Overlay::dp_polygon:
      tile = backdrop(mask);
      draw_polygon(tile, roi.dp, kDp, thickness);
      for (const auto& v : roi.dp) cv::circle(tile, px(v), thickness + 1, kDp, cv::FILLED, cv::LINE_8);
      return;
    case Overlay::mpp_polygon:
      tile = backdrop(mask);
      draw_polygon(tile, roi.mpp, kMpp, thickness);
      for (const auto& v : roi.mpp) cv::circle(tile, px(v), thickness + 1, kMpp, cv::FILLED, cv::LINE_8);
      return;
    case Overlay::curvature_colored_boundary: {
      tile = backdrop(mask);
      const std::size_t n = roi.samples.size();
      if (n == 0) return;
      std::vector<double> mag(roi.curvature.size());
      for (std::size_t i = 0; i < mag.size(); ++i) mag[i] = std::abs(roi.curvature[i]);
      const double q1 = quantile(mag, 0.25), q2 = quantile(mag, 0.5), q3 = quantile(mag, 0.75);
      for (std::size_t i = 0; i < n; ++i) {
        const int bucket = mag[i] <= q1 ? 0 : mag[i] <= q2 ? 1 : mag[i] <= q3 ? 2 : 3;
        cv::line(tile, px(roi.samples[i]), px(roi.samples[(i + 1) % n]), kQuartile[bucket], thickness + 1, cv::LINE_8);
      }
      return;
    }
    case Overlay::signature_plot: {
      tile = backdrop(mask);
      const auto& v = roi.centroid_distance;
      if (v.size() < 2) return;
      const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
      const double lo = *lo_it;
      const double span = std::max(*hi_it - lo, 1e-9);
      const double margin = 0.1 * tile.rows;
      const double usable = tile.rows - 2.0 * margin;
      std::vector<cv::Point> pts;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double x = static_cast<double>(i) * (tile.cols - 1) / static_cast<double>(v.size() - 1);
        const double y = margin + usable * (1.0 - (v[i] - lo) / span);
        pts.push_back(px({x, y}));
      }
      cv::polylines(tile, pts, false, kRay, thickness, cv::LINE_8);
      return;
    }
  }
}

}  // namespace

std::string_view overlay_name(Overlay kind) {
  switch (kind) {
    case Overlay::reference: return "reference";
    case Overlay::centroid_rays: return "centroid_rays";
    case Overlay::hull_polygon: return "hull_polygon";
    case Overlay::mbr_box: return "mbr_box";
    case Overlay::mpp_polygon: return "mpp_polygon";
    case Overlay::dp_polygon: return "dp_polygon";
    case Overlay::curvature_colored_boundary: return "curvature_colored_boundary";
    case Overlay::signature_plot: return "signature_plot";
  }
  return "unknown";
}

FeatureMapSpec default_spec() {
  return FeatureMapSpec{{{"binary mask", Overlay::reference},
                         {"centroid distance", Overlay::centroid_rays},
                         {"convex hull", Overlay::hull_polygon},
                         {"min bounding rect", Overlay::mbr_box},
                         {"douglas-peucker", Overlay::dp_polygon},
                         {"min perimeter polygon", Overlay::mpp_polygon},
                         {"curvature", Overlay::curvature_colored_boundary},
                         {"cdf signature", Overlay::signature_plot}},
                        4};
}

RoiOverlay describe_roi(const Contour& contour, std::size_t n_samples, double dp_epsilon, int mpp_cell) {
  RoiOverlay roi;
  roi.contour = contour;
  roi.centroid = geom::centroid(contour);
  roi.samples = signature::resample_equal_arclength(contour, n_samples);
  roi.curvature = signature::curvature_function(contour, n_samples).values;
  roi.centroid_distance = signature::centroid_distance_function(contour, n_samples).values;
  roi.hull = geom::convex_hull(contour);
  roi.mbr = geom::min_bounding_rect(roi.hull);
  roi.dp = poly::douglas_peucker(contour, dp_epsilon).vertices;
  try {
    roi.mpp = poly::min_perimeter_polygon(contour, mpp_cell).vertices;
  } catch (const DegenerateError&) {
    roi.mpp.clear();
  }
  return roi;
}

void validate(const FeatureMapSpec& spec) {
  if (spec.panels.empty()) throw Error("feature map needs at least one panel");
  if (spec.panels.front().kind != Overlay::reference) throw Error("first feature map panel must be the reference mask");
  if (spec.columns < 1) throw Error("feature map needs at least one column");
}

std::vector<std::uint8_t> render_feature_map(const BinaryMask& mask, const RoiOverlay& roi, const FeatureMapSpec& spec) {
  validate(spec);
  const int w = mask.width();
  const int h = mask.height();
  const int panels = static_cast<int>(spec.panels.size());
  const int cols = std::min(spec.columns, panels);
  const int rows = (panels + cols - 1) / cols;
  const int thickness = std::max(1, std::min(w, h) / 250);
  const double font = std::max(0.3, std::min(w, h) / 600.0);

  cv::Mat canvas(rows * h, cols * w, CV_8UC3, cv::Scalar(0, 0, 0));
  for (int i = 0; i < panels; ++i) {
    const auto& panel = spec.panels[static_cast<std::size_t>(i)];
    cv::Mat tile;
    draw_tile(tile, mask, roi, panel.kind, thickness);
    int baseline = 0;
    const cv::Size text = cv::getTextSize(panel.caption, cv::FONT_HERSHEY_SIMPLEX, font, 1, &baseline);
    cv::rectangle(tile, cv::Rect(0, 0, std::min(w, text.width + 6), std::min(h, text.height + baseline + 6)),
                  cv::Scalar(40, 40, 40), cv::FILLED);
    cv::putText(tile, panel.caption, cv::Point(3, 3 + text.height), cv::FONT_HERSHEY_SIMPLEX, font, kCaption, 1,
                cv::LINE_8);
    tile.copyTo(canvas(cv::Rect((i % cols) * w, (i / cols) * h, w, h)));
  }
  return detail::encode_png(canvas);
}

}  // namespace cellshape::featuremap
