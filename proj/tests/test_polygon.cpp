#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cellshape/error.hpp"
#include "cellshape/geometry.hpp"
#include "cellshape/polygon.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace cellshape::poly {
namespace {

using cellshape::testing::box;
using cellshape::testing::distance_to_closed_polyline;
using cellshape::testing::first_outer_contour;
using cellshape::testing::path_length;

TEST(DouglasPeucker, SquareCollapsesToCorners) {
  const auto c = first_outer_contour(box(40, 40, 5, 5, 34, 34));
  const auto dp = douglas_peucker(c, 0.5);
  ASSERT_EQ(dp.vertices.size(), 4u);
  for (auto v : dp.vertices) {
    EXPECT_TRUE(v.x == 5 || v.x == 34);
    EXPECT_TRUE(v.y == 5 || v.y == 34);
  }
  EXPECT_EQ(dp.method, Method::douglas_peucker);
  EXPECT_EQ(dp.param, 0.5);
}

TEST(DouglasPeucker, ZeroEpsilonKeepsAll) {
  std::mt19937 rng(1);
  const auto c = first_outer_contour(cellshape::testing::random_blob(100, 100, rng));
  const auto dp = douglas_peucker(c, 0.0);
  EXPECT_EQ(dp.vertices.size(), c.size());
  EXPECT_DOUBLE_EQ(polygon_metrics(dp, c).compression, 1.0);
}

TEST(DouglasPeucker, CircleDeviationBound) {
  const auto c = first_outer_contour(cellshape::testing::disc(160, 160, 80, 80, 64));
  const auto dp = douglas_peucker(c, 2.0);
  for (auto p : geom::to_real(c.points)) EXPECT_LE(distance_to_closed_polyline(p, dp.vertices), 2.0 + 1e-9);
}

TEST(DouglasPeucker, VerticesAreOrderedSubsequence) {
  std::mt19937 rng(2);
  for (int i = 0; i < 10; ++i) {
    const auto c = first_outer_contour(cellshape::testing::random_blob(120, 120, rng));
    for (double eps : {0.5, 1.0, 2.0, 4.0}) {
      const auto dp = douglas_peucker(c, eps);
      ASSERT_EQ(dp.vertices.size(), dp.source_indices.size());
      ASSERT_GE(dp.vertices.size(), 3u);
      EXPECT_TRUE(std::is_sorted(dp.source_indices.begin(), dp.source_indices.end()));
      for (std::size_t k = 0; k < dp.vertices.size(); ++k) {
        const auto p = c.points[dp.source_indices[k]];
        EXPECT_EQ(dp.vertices[k].x, p.x);
        EXPECT_EQ(dp.vertices[k].y, p.y);
      }
    }
  }
}

TEST(DouglasPeucker, MonotoneInEpsilon) {
  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto c = first_outer_contour(cellshape::testing::random_blob(120, 120, rng));
    std::size_t prev = c.size();
    for (double eps : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
      const auto n = douglas_peucker(c, eps).vertices.size();
      EXPECT_LE(n, prev);
      prev = n;
    }
  }
}

TEST(DouglasPeucker, TranslationEquivariant) {
  std::mt19937 rng(4);
  const auto c = first_outer_contour(cellshape::testing::random_blob(100, 100, rng));
  Contour moved = c;
  for (auto& p : moved.points) p = {p.x + 13, p.y - 7};
  const auto a = douglas_peucker(c, 1.5), b = douglas_peucker(moved, 1.5);
  ASSERT_EQ(a.vertices.size(), b.vertices.size());
  for (std::size_t k = 0; k < a.vertices.size(); ++k) {
    EXPECT_EQ(a.vertices[k].x + 13, b.vertices[k].x);
    EXPECT_EQ(a.vertices[k].y - 7, b.vertices[k].y);
  }
}

TEST(DouglasPeucker, SquareMetrics) {
  const auto c = first_outer_contour(box(40, 40, 5, 5, 34, 34));
  const auto m = polygon_metrics(douglas_peucker(c, 0.5), c);
  EXPECT_EQ(m.n_vertices, 4u);
  EXPECT_NEAR(m.perimeter_ratio, 1.0, 1e-12);
  EXPECT_NEAR(m.area_ratio, 1.0, 1e-12);
}

TEST(Mpp, SquareHasFourCorners) {
  const auto c = first_outer_contour(box(60, 60, 10, 10, 49, 49));
  const auto mpp = min_perimeter_polygon(c, 2);
  ASSERT_EQ(mpp.vertices.size(), 4u);
  for (auto v : mpp.vertices) {
    EXPECT_TRUE(std::abs(v.x - 10) <= 2 || std::abs(v.x - 49) <= 2);
    EXPECT_TRUE(std::abs(v.y - 10) <= 2 || std::abs(v.y - 49) <= 2);
  }
  EXPECT_EQ(mpp.method, Method::mpp);
}

TEST(Mpp, ConvexShapeTracksHull) {
  const auto c = first_outer_contour(cellshape::testing::disc(160, 160, 80, 80, 50));
  for (int cell : {1, 2, 3}) {
    const auto mpp = min_perimeter_polygon(c, cell);
    const auto h = geom::convex_hull(c);
    EXPECT_NEAR(path_length(mpp.vertices), path_length(h), 2.0 * cell * mpp.vertices.size());
    for (auto v : mpp.vertices) EXPECT_LE(distance_to_closed_polyline(v, h), cell + 1e-9);
  }
}

TEST(Mpp, PerimeterBelowContourOnBlobs) {
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto c = first_outer_contour(cellshape::testing::random_blob(140, 140, rng));
    const auto mpp = min_perimeter_polygon(c, 2);
    EXPECT_LT(polygon_metrics(mpp, c).perimeter_ratio, 1.0);
    EXPECT_GE(mpp.vertices.size(), 3u);
  }
}

TEST(Mpp, PolygonIsSimple) {
  std::mt19937 rng(6);
  for (int i = 0; i < 5; ++i) {
    const auto c = first_outer_contour(cellshape::testing::random_blob(140, 140, rng));
    const auto v = min_perimeter_polygon(c, 2).vertices;
    const std::size_t n = v.size();
    auto cross = [](Point2d o, Point2d a, Point2d b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
    for (std::size_t i1 = 0; i1 < n; ++i1) {
      for (std::size_t j1 = i1 + 2; j1 < n; ++j1) {
        if (i1 == 0 && j1 == n - 1) continue;
        const auto a = v[i1], b = v[(i1 + 1) % n], p = v[j1], q = v[(j1 + 1) % n];
        const bool hit = cross(a, b, p) * cross(a, b, q) < 0 && cross(p, q, a) * cross(p, q, b) < 0;
        EXPECT_FALSE(hit) << "edges " << i1 << " and " << j1;
      }
    }
  }
}

TEST(Mpp, BandCornersClassified) {
  auto m = box(60, 60, 10, 10, 49, 49);
  cellshape::testing::fill_box(m, 30, 10, 49, 29, false);
  const auto band = cellular_band(first_outer_contour(m), 2);
  ASSERT_EQ(band.inner_wall.size(), band.convex.size());
  ASSERT_EQ(band.inner_wall.size(), band.candidates.size());
  const auto concave = std::count(band.convex.begin(), band.convex.end(), false);
  EXPECT_EQ(concave, 1);
  EXPECT_EQ(band.inner_wall.size(), 6u);
}

TEST(Mpp, ThinShapeRejected) {
  BinaryMask m(30, 10);
  cellshape::testing::fill_box(m, 2, 4, 27, 5);
  EXPECT_THROW(min_perimeter_polygon(first_outer_contour(m), 2), DegenerateError);
}

TEST(Mpp, TranslationEquivariant) {
  std::mt19937 rng(7);
  const auto c = first_outer_contour(cellshape::testing::random_blob(100, 100, rng));
  Contour moved = c;
  for (auto& p : moved.points) p = {p.x + 9, p.y + 4};
  const auto a = min_perimeter_polygon(c, 2), b = min_perimeter_polygon(moved, 2);
  ASSERT_EQ(a.vertices.size(), b.vertices.size());
  for (std::size_t k = 0; k < a.vertices.size(); ++k) {
    EXPECT_EQ(a.vertices[k].x + 9, b.vertices[k].x);
    EXPECT_EQ(a.vertices[k].y + 4, b.vertices[k].y);
  }
}

TEST(Names, Methods) {
  EXPECT_EQ(method_name(Method::douglas_peucker), "douglas_peucker");
  EXPECT_EQ(method_name(Method::mpp), "mpp");
}

}  // namespace
}  // namespace cellshape::poly
