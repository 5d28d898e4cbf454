#include "render_util.hpp"

#include <array>

#include <opencv2/imgcodecs.hpp>

#include "cellshape/error.hpp"

namespace cellshape::detail {

cv::Mat mask_to_bgr(const BinaryMask& mask) {
  cv::Mat out(mask.height(), mask.width(), CV_8UC3);
  for (int y = 0; y < mask.height(); ++y) {
    auto* row = out.ptr<cv::Vec3b>(y);
    for (int x = 0; x < mask.width(); ++x) {
      const std::uint8_t v = mask.at(x, y) ? 255 : 0;
      row[x] = cv::Vec3b(v, v, v);
    }
  }
  return out;
}

std::vector<std::uint8_t> encode_png(const cv::Mat& image) {
  std::vector<std::uint8_t> bytes;
  const std::vector<int> params{cv::IMWRITE_PNG_COMPRESSION, 6};
  if (!cv::imencode(".png", image, bytes, params)) throw Error("PNG encoding failed");
  return bytes;
}

cv::Scalar label_color(int label) {
  // BGR
  static constexpr std::array<std::array<int, 3>, 10> kPalette{{{0, 0, 230},
                                                                {0, 200, 0},
                                                                {230, 90, 0},
                                                                {0, 215, 255},
                                                                {200, 0, 200},
                                                                {220, 220, 0},
                                                                {0, 128, 255},
                                                                {128, 0, 64},
                                                                {90, 160, 90},
                                                                {160, 160, 255}}};
  if (label <= 0) return cv::Scalar(0, 0, 0);
  const auto& c = kPalette[static_cast<std::size_t>(label - 1) % kPalette.size()];
  return cv::Scalar(c[0], c[1], c[2]);
}

}  // namespace cellshape::detail
