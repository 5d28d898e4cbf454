#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cellshape/error.hpp"
#include "cellshape/geometry.hpp"
#include "cellshape/raster.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace cellshape::geom {
namespace {

using cellshape::testing::box;
using cellshape::testing::fill_box;
using cellshape::testing::first_outer_contour;

Contour contour_of(std::vector<Point> pts) {
  Contour c;
  c.points = std::move(pts);
  c.region_label = 1;
  return c;
}

TEST(Basic, SquareAreaPerimeterCentroid) {
  const auto c = contour_of({{0, 0}, {99, 0}, {99, 99}, {0, 99}});
  EXPECT_DOUBLE_EQ(polygon_area(c), 9801.0);
  EXPECT_DOUBLE_EQ(polygon_perimeter(c), 396.0);
  const auto ctr = centroid(c);
  EXPECT_DOUBLE_EQ(ctr.x, 49.5);
  EXPECT_DOUBLE_EQ(ctr.y, 49.5);
  const auto moved = contour_of({{10, 7}, {109, 7}, {109, 106}, {10, 106}});
  EXPECT_DOUBLE_EQ(polygon_area(moved), 9801.0);
  EXPECT_DOUBLE_EQ(polygon_perimeter(moved), 396.0);
  EXPECT_DOUBLE_EQ(centroid(moved).x, 59.5);
  EXPECT_DOUBLE_EQ(centroid(moved).y, 56.5);
}

TEST(Basic, TracedSquareMatchesCorners) {
  const auto c = first_outer_contour(box(120, 120, 10, 10, 109, 109));
  EXPECT_DOUBLE_EQ(polygon_area(c), 9801.0);
  EXPECT_DOUBLE_EQ(polygon_perimeter(c), 396.0);
}

TEST(Basic, RandomPolygonAreaMatchesFan) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> rad(5.0, 40.0);
  for (int trial = 0; trial < 20; ++trial) {
    // Star-shaped around the origin, hence simple.
    std::vector<Point2d> poly;
    for (int k = 0; k < 20; ++k) {
      const double t = 2 * std::numbers::pi * k / 20;
      const double r = rad(rng);
      poly.push_back({r * std::cos(t) + 3, r * std::sin(t) - 2});
    }
    const double fan = cellshape::testing::fan_area(poly, {3, -2});
    EXPECT_NEAR(signed_area(poly), fan, 1e-9);
    EXPECT_NEAR(polygon_area(poly), std::abs(fan), 1e-9);
  }
}

TEST(Basic, ZeroAreaCentroidRejected) {
  const std::vector<Point2d> line = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  EXPECT_THROW(centroid(line), DegenerateError);
}

TEST(Circularity, Values) {
  EXPECT_NEAR(circularity(std::numbers::pi * 25, 2 * std::numbers::pi * 5), 1.0, 1e-12);
  EXPECT_NEAR(circularity(9801, 396), std::numbers::pi / 4, 1e-12);
  EXPECT_DOUBLE_EQ(circularity(1e6, 1.0), 1.05);
}

TEST(Eccentricity, DiscAndEllipse) {
  const auto d = cellshape::testing::disc(160, 160, 80, 80, 64);
  EXPECT_LE(eccentricity(region_pixels(raster::label_components(d), 1)), 0.05);
  const auto e = cellshape::testing::ellipse(200, 120, 100, 60, 80, 40);
  const auto px = region_pixels(raster::label_components(e), 1);
  EXPECT_NEAR(eccentricity(px), 0.866, 0.02);
  EXPECT_NEAR(eccentricity(px), cellshape::testing::pixel_eccentricity(px), 1e-9);
}

TEST(Eccentricity, RotationInvariant) {
  std::mt19937 rng(41);
  const auto m = cellshape::testing::random_blob(90, 90, rng);
  std::vector<Point> px, rot;
  for (int y = 0; y < 90; ++y)
    for (int x = 0; x < 90; ++x)
      if (m.at(x, y)) {
        px.push_back({x, y});
        rot.push_back({89 - y, x});
      }
  EXPECT_NEAR(eccentricity(px), eccentricity(rot), 1e-6);
}

TEST(Eccentricity, LineAndSinglePixel) {
  EXPECT_NEAR(eccentricity(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}), 1.0, 1e-12);
  EXPECT_THROW(eccentricity(std::vector<Point>{{3, 3}}), DegenerateError);
}

TEST(Hull, SquarePlusCenter) {
  const std::vector<Point2d> pts = {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}, {2, 0}};
  const auto h = convex_hull(pts);
  ASSERT_EQ(h.size(), 4u);
  EXPECT_GT(signed_area(h), 0.0);
}

TEST(Hull, ConvexPolygonKeepsVertices) {
  std::vector<Point2d> hex;
  for (int k = 0; k < 6; ++k) hex.push_back({10 * std::cos(k * std::numbers::pi / 3), 10 * std::sin(k * std::numbers::pi / 3)});
  EXPECT_EQ(convex_hull(hex).size(), 6u);
}

TEST(Hull, MatchesBruteForce) {
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> coord(-50, 50);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Point2d> pts;
    for (int i = 0; i < 200; ++i) pts.push_back({double(coord(rng)), double(coord(rng))});
    auto h = convex_hull(pts);
    std::sort(h.begin(), h.end(), [](Point2d a, Point2d b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    const auto ref = cellshape::testing::brute_force_hull_vertices(pts);
    ASSERT_EQ(h.size(), ref.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      EXPECT_EQ(h[i].x, ref[i].x);
      EXPECT_EQ(h[i].y, ref[i].y);
    }
  }
}

TEST(Hull, CollinearRejected) {
  const std::vector<Point2d> pts = {{0, 0}, {1, 1}, {2, 2}};
  EXPECT_THROW(convex_hull(pts), DegenerateError);
}

TEST(Ratios, ConvexShapesNearOne) {
  const auto c = first_outer_contour(cellshape::testing::disc(160, 160, 80, 80, 64));
  const auto h = convex_hull(c);
  EXPECT_NEAR(solidity(polygon_area(c), h), 1.0, 0.02);
  EXPECT_NEAR(convexity(polygon_perimeter(c), h), 1.0, 0.1);
}

TEST(Ratios, LShapeSolidityMatchesHullArea) {
  auto m = box(140, 140, 20, 20, 119, 119);
  fill_box(m, 70, 20, 119, 69, false);
  const auto c = first_outer_contour(m);
  const auto h = convex_hull(c);
  // Hull from the brute-force vertex set, ordered around its centroid.
  auto ref = cellshape::testing::brute_force_hull_vertices(to_real(c.points));
  double cx = 0, cy = 0;
  for (auto p : ref) cx += p.x, cy += p.y;
  cx /= ref.size();
  cy /= ref.size();
  std::sort(ref.begin(), ref.end(), [&](Point2d a, Point2d b) {
    return std::atan2(a.y - cy, a.x - cx) < std::atan2(b.y - cy, b.x - cx);
  });
  const double hull_area = std::abs(cellshape::testing::fan_area(ref, {cx, cy}));
  EXPECT_NEAR(solidity(polygon_area(c), h), polygon_area(c) / hull_area, 1e-9);
  // Square minus a quadrant: (3/4) / (7/8).
  EXPECT_NEAR(solidity(polygon_area(c), h), 6.0 / 7.0, 0.01);
}

TEST(Ratios, StarConvexityBelowOne) {
  std::vector<Point2d> star;
  for (int k = 0; k < 10; ++k) {
    const double r = k % 2 ? 10 : 25;
    star.push_back({r * std::cos(k * std::numbers::pi / 5), r * std::sin(k * std::numbers::pi / 5)});
  }
  const auto h = convex_hull(star);
  EXPECT_LT(convexity(polygon_perimeter(star), h), 1.0);
  EXPECT_LT(solidity(polygon_area(star), h), 1.0);
}

TEST(Mbr, AxisAlignedRectangle) {
  const std::vector<Point2d> r = {{0, 0}, {100, 0}, {100, 50}, {0, 50}};
  const auto m = min_bounding_rect(convex_hull(r));
  EXPECT_NEAR(m.width, 100, 1e-9);
  EXPECT_NEAR(m.height, 50, 1e-9);
  EXPECT_NEAR(m.angle_deg, 0, 1e-9);
  EXPECT_NEAR(m.center.x, 50, 1e-9);
  EXPECT_NEAR(m.center.y, 25, 1e-9);
}

TEST(Mbr, TallRectangleAngle90) {
  const std::vector<Point2d> r = {{0, 0}, {20, 0}, {20, 80}, {0, 80}};
  const auto m = min_bounding_rect(convex_hull(r));
  EXPECT_NEAR(m.width, 80, 1e-9);
  EXPECT_NEAR(m.angle_deg, 90, 1e-9);
}

TEST(Mbr, RotatedRectangle) {
  const auto c = first_outer_contour(cellshape::testing::rotated_rect(200, 200, 100, 100, 100, 50, 30));
  const auto m = min_bounding_rect(convex_hull(c));
  EXPECT_NEAR(m.angle_deg, 30, 1);
  EXPECT_NEAR(m.width, 100, 2);
  EXPECT_NEAR(m.height, 50, 2);
}

TEST(Mbr, MatchesRotationSweepAndContainsPoints) {
  std::mt19937 rng(61);
  for (int i = 0; i < 10; ++i) {
    const auto c = first_outer_contour(cellshape::testing::random_blob(120, 120, rng));
    const auto pts = to_real(c.points);
    const auto m = min_bounding_rect(convex_hull(pts));
    const auto sweep = cellshape::testing::rotation_sweep_mbr(pts, 0.1);
    EXPECT_LE(m.area(), sweep.area * (1 + 1e-9));
    EXPECT_GE(m.area(), sweep.area * 0.995);
    EXPECT_GE(m.width, m.height);
    EXPECT_GE(m.angle_deg, 0.0);
    EXPECT_LT(m.angle_deg, 180.0);
    const auto k = m.corners();
    for (const auto& p : pts) {
      for (int e = 0; e < 4; ++e) {
        const auto a = k[e], b = k[(e + 1) % 4];
        const double cr = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        EXPECT_GE(cr / len, -1e-6);
      }
    }
    // MBR area >= hull area >= contour area.
    const auto h = convex_hull(pts);
    EXPECT_GE(m.area() + 1e-6, polygon_area(h));
    EXPECT_GE(polygon_area(h) + 1e-6, polygon_area(pts));
  }
}

TEST(Mbr, ScalingEquivariant) {
  std::mt19937 rng(63);
  const auto c = first_outer_contour(cellshape::testing::random_blob(120, 120, rng));
  auto pts = to_real(c.points);
  const auto m1 = min_bounding_rect(convex_hull(pts));
  for (auto& p : pts) p = {3 * p.x, 3 * p.y};
  const auto m3 = min_bounding_rect(convex_hull(pts));
  EXPECT_NEAR(m3.width, 3 * m1.width, 1e-6);
  EXPECT_NEAR(m3.height, 3 * m1.height, 1e-6);
  EXPECT_NEAR(m3.angle_deg, m1.angle_deg, 1e-6);
}

TEST(Ratios, RectangularityAndElongation) {
  const auto rect = first_outer_contour(box(120, 80, 10, 10, 109, 59));
  const auto mr = min_bounding_rect(convex_hull(rect));
  EXPECT_NEAR(rectangularity(polygon_area(rect), mr), 1.0, 0.05);
  const auto d = first_outer_contour(cellshape::testing::disc(160, 160, 80, 80, 64));
  const auto md = min_bounding_rect(convex_hull(d));
  EXPECT_NEAR(rectangularity(polygon_area(d), md), std::numbers::pi / 4, 0.03);
  const auto sq = first_outer_contour(box(50, 50, 5, 5, 44, 44));
  EXPECT_NEAR(elongation(min_bounding_rect(convex_hull(sq))), 0.0, 0.02);
  EXPECT_NEAR(elongation(mr), 1.0 - 49.0 / 99.0, 1e-9);
}

TEST(Abe, CircleValueAndScaling) {
  const auto c64 = first_outer_contour(cellshape::testing::disc(160, 160, 80, 80, 64));
  const auto c32 = first_outer_contour(cellshape::testing::disc(100, 100, 50, 50, 32));
  const double a64 = average_bending_energy(c64, 128);
  const double a32 = average_bending_energy(c32, 128);
  EXPECT_NEAR(a64, 1.0 / (64.0 * 64.0), 0.15 / (64.0 * 64.0));
  // Quantization noise in the curvature grows as the radius shrinks, so the
  // ratio overshoots 4 on the high side.
  EXPECT_GE(a32 / a64, 4.0 * 0.8);
  EXPECT_GT(a32, a64);
}

TEST(Abe, WavyBlobAboveItsHull) {
  std::mt19937 rng(71);
  for (int i = 0; i < 5; ++i) {
    const auto c = first_outer_contour(cellshape::testing::random_blob(140, 140, rng));
    const auto h = convex_hull(c);
    // Fill the hull and trace it to get a pixel contour with the same sampling.
    Contour hull_contour;
    for (auto p : h) hull_contour.points.push_back({int(p.x), int(p.y)});
    const auto filled = raster::fill_contour(hull_contour, 140, 140);
    const auto hc = first_outer_contour(filled);
    EXPECT_GT(average_bending_energy(c, 128), average_bending_energy(hc, 128));
    EXPECT_GE(average_bending_energy(c, 128), 0.0);
  }
}

TEST(Holes, SolidAndHoled) {
  const auto solid = first_outer_contour(box(20, 20, 2, 2, 12, 12));
  const auto s = euler_and_holes(solid, {});
  EXPECT_EQ(s.euler_number, 1);
  EXPECT_EQ(s.hole_area_ratio, 0.0);

  auto m = box(12, 12, 2, 2, 10, 10);
  fill_box(m, 5, 5, 7, 7, false);
  const auto cs = raster::trace_contours(raster::label_components(m));
  ASSERT_EQ(cs.size(), 2u);
  const auto h = euler_and_holes(cs[0], std::span(cs).subspan(1));
  EXPECT_EQ(h.euler_number, 0);
  EXPECT_NEAR(h.hole_area_ratio, polygon_area(cs[1]) / polygon_area(cs[0]), 1e-12);
  EXPECT_GT(h.hole_area_ratio, 0.0);
  EXPECT_LT(h.hole_area_ratio, 1.0);
}

TEST(Holes, TwoHoles) {
  auto m = box(30, 20, 1, 1, 28, 18);
  fill_box(m, 5, 5, 9, 9, false);
  fill_box(m, 18, 6, 23, 12, false);
  const auto cs = raster::trace_contours(raster::label_components(m));
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(euler_and_holes(cs[0], std::span(cs).subspan(1)).euler_number, -1);
}

TEST(Features, RangesOnRandomBlobs) {
  std::mt19937 rng(81);
  for (int i = 0; i < 10; ++i) {
    const auto m = raster::preprocess(cellshape::testing::random_blob(120, 120, rng));
    const auto lab = raster::label_components(m);
    const auto cs = raster::trace_contours(lab);
    const auto px = region_pixels(lab, cs[0].region_label);
    const auto f = compute_geometric_features(cs[0], {}, px, 128);
    EXPECT_GT(f.area, 0);
    EXPECT_LE(f.circularity, 1.05);
    EXPECT_GE(f.eccentricity, 0);
    EXPECT_LT(f.eccentricity, 1);
    EXPECT_GT(f.solidity, 0);
    EXPECT_LE(f.solidity, 1 + 1e-9);
    EXPECT_GT(f.convexity, 0);
    EXPECT_LE(f.convexity, 1 + 1e-9);
    EXPECT_GT(f.rectangularity, 0);
    EXPECT_LE(f.rectangularity, 1 + 1e-9);
    EXPECT_GE(f.elongation, 0);
    EXPECT_LT(f.elongation, 1);
    EXPECT_GE(f.abe, 0);
  }
}

}  // namespace
}  // namespace cellshape::geom
