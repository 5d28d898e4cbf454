#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "cellshape/types.hpp"

namespace cellshape::signature {

inline constexpr std::size_t kDefaultSamples = 128;

enum class Kind { centroid_distance, tangent_angle, curvature, area_function, chord_length, triangle_area };

inline constexpr std::array<Kind, 6> kAllKinds{Kind::centroid_distance, Kind::tangent_angle, Kind::curvature,
                                               Kind::area_function,     Kind::chord_length,  Kind::triangle_area};

std::string_view kind_name(Kind kind);

struct ShapeSignature {
  Kind kind;
  std::vector<double> values;

  std::size_t n_samples() const { return values.size(); }
};

struct SignatureStats {
  double mean = 0.0;
  double std = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// n points at arc-length positions k P / n along the closed polygon,
/// measured from its first vertex. Throws DegenerateError for zero perimeter.
std::vector<Point2d> resample_equal_arclength(std::span<const Point2d> polygon, std::size_t n);
std::vector<Point2d> resample_equal_arclength(const Contour& contour, std::size_t n);

/// Every signature samples n >= 8 equal-arc-length points; curvature and
/// tangent use a central difference window of max(1, n / 32) samples.
ShapeSignature centroid_distance_function(std::span<const Point2d> polygon, std::size_t n = kDefaultSamples);
ShapeSignature tangent_angle_function(std::span<const Point2d> polygon, std::size_t n = kDefaultSamples);
ShapeSignature curvature_function(std::span<const Point2d> polygon, std::size_t n = kDefaultSamples);
ShapeSignature area_function(std::span<const Point2d> polygon, std::size_t n = kDefaultSamples);
ShapeSignature chord_length_function(std::span<const Point2d> polygon, std::size_t n = kDefaultSamples);
/// ts = 0 selects the default offset n / 8.
ShapeSignature triangle_area_signature(std::span<const Point2d> polygon, std::size_t n = kDefaultSamples,
                                       std::size_t ts = 0);

ShapeSignature centroid_distance_function(const Contour& contour, std::size_t n = kDefaultSamples);
ShapeSignature tangent_angle_function(const Contour& contour, std::size_t n = kDefaultSamples);
ShapeSignature curvature_function(const Contour& contour, std::size_t n = kDefaultSamples);
ShapeSignature area_function(const Contour& contour, std::size_t n = kDefaultSamples);
ShapeSignature chord_length_function(const Contour& contour, std::size_t n = kDefaultSamples);
ShapeSignature triangle_area_signature(const Contour& contour, std::size_t n = kDefaultSamples, std::size_t ts = 0);

/// All six signatures, in kAllKinds order, sharing one resampling pass.
std::vector<ShapeSignature> compute_signatures(const Contour& contour, std::size_t n = kDefaultSamples);

/// Population statistics.
SignatureStats summarize_signature(const ShapeSignature& sig);

}  // namespace cellshape::signature
