#pragma once

// Shared OpenCV helpers for the PNG renderers. Private to the library.

#include <cstdint>
#include <vector>

#include <opencv2/core.hpp>

#include "cellshape/types.hpp"

namespace cellshape::detail {

/// White-on-black BGR copy of the mask.
cv::Mat mask_to_bgr(const BinaryMask& mask);

std::vector<std::uint8_t> encode_png(const cv::Mat& image);

/// Fixed categorical palette; label 0 is black.
cv::Scalar label_color(int label);

}  // namespace cellshape::detail
