#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cellshape/types.hpp"

namespace cellshape::raster {

inline constexpr std::uint8_t kDefaultThreshold = 127;
inline constexpr double kDefaultSigma = 1.0;
inline constexpr int kDefaultCloseRadius = 1;
inline constexpr std::size_t kMinContourPoints = 4;

/// Reads a PNG, JPEG or TIFF file and thresholds its luma: foreground iff
/// luma > threshold. RGB input uses Y = (299 R + 587 G + 114 B) / 1000.
/// Throws FormatError for other containers and DecodeError for unreadable files.
BinaryMask decode_mask(const std::filesystem::path& path, std::uint8_t threshold = kDefaultThreshold);

/// Same as decode_mask for an in-memory interleaved 8-bit buffer (1, 3 or 4
/// channels, BGR(A) order).
BinaryMask binarize_buffer(std::span<const std::uint8_t> data, int width, int height, int channels,
                           std::uint8_t threshold = kDefaultThreshold);

/// Normalized separable Gaussian taps, radius ceil(3 sigma).
std::vector<float> gaussian_kernel(double sigma);

/// Blurs the 0/1 field with reflected borders and keeps pixels whose
/// response is at least 0.5.
BinaryMask gaussian_blur_then_rebinarize(const BinaryMask& mask, double sigma = kDefaultSigma);

/// Square structuring element of side 2 * radius + 1; pixels outside the
/// image are background.
BinaryMask dilate(const BinaryMask& mask, int radius);
BinaryMask erode(const BinaryMask& mask, int radius);
BinaryMask morphological_close(const BinaryMask& mask, int kernel_radius = kDefaultCloseRadius);

/// Blur, re-binarize, then close.
BinaryMask preprocess(const BinaryMask& mask, double sigma = kDefaultSigma,
                      int close_radius = kDefaultCloseRadius);

/// 8-connected labeling. Labels follow the raster-scan order of each
/// component's first pixel.
LabeledMask label_components(const BinaryMask& mask);

/// Pixel count per label, index 0 is background.
std::vector<std::size_t> region_areas(const LabeledMask& labeled);

/// Moore-neighbour border following with Jacob's stopping criterion. For
/// each region, in label order: its outer contour, then the contours of its
/// holes (4-connected background pockets) in raster order. Contours with
/// fewer than four points are dropped.
std::vector<Contour> trace_contours(const LabeledMask& labeled);

/// Label of the region with the most pixels, ties to the smaller label.
/// Throws NoRegionError on an empty labeling.
int largest_region(const LabeledMask& labeled);

/// Pixels whose centers are inside or on the contour polygon (even-odd
/// scanline fill plus the contour points themselves).
BinaryMask fill_contour(const Contour& contour, int width, int height);

}  // namespace cellshape::raster
