#include <array>
#include <cstring>
#include <fstream>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "cellshape/error.hpp"
#include "cellshape/kernels.hpp"
#include "cellshape/raster.hpp"

namespace cellshape::raster {
namespace {

enum class Container { png, jpeg, tiff, unknown };

Container sniff(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError("cannot open " + path.string());
  std::array<unsigned char, 8> head{};
  in.read(reinterpret_cast<char*>(head.data()), head.size());
  const auto got = static_cast<std::size_t>(in.gcount());
  static constexpr std::array<unsigned char, 8> kPng{0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
  if (got >= 8 && head == kPng) return Container::png;
  if (got >= 3 && head[0] == 0xff && head[1] == 0xd8 && head[2] == 0xff) return Container::jpeg;
  if (got >= 4 && ((head[0] == 'I' && head[1] == 'I' && head[2] == 42 && head[3] == 0) ||
                   (head[0] == 'M' && head[1] == 'M' && head[2] == 0 && head[3] == 42))) {
    return Container::tiff;
  }
  return Container::unknown;
}

}  // namespace

BinaryMask binarize_buffer(std::span<const std::uint8_t> data, int width, int height, int channels,
                           std::uint8_t threshold) {
  const auto n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (width < 1 || height < 1 || data.size() != n * static_cast<std::size_t>(channels)) {
    throw DecodeError("pixel buffer does not match its dimensions");
  }
  const auto& k = kernels::active_kernels();
  std::vector<std::uint8_t> out(n);
  switch (channels) {
    case 1:
      k.gray_above(data.data(), n, threshold, out.data());
      break;
    case 3:
      k.bgr_luma_above(data.data(), n, threshold, out.data());
      break;
    case 4: {
      std::vector<std::uint8_t> bgr(n * 3);
      for (std::size_t i = 0; i < n; ++i) std::memcpy(&bgr[3 * i], &data[4 * i], 3);
      k.bgr_luma_above(bgr.data(), n, threshold, out.data());
      break;
    }
    default:
      throw DecodeError("unsupported channel count " + std::to_string(channels));
  }
  return BinaryMask(width, height, std::move(out));
}

BinaryMask decode_mask(const std::filesystem::path& path, std::uint8_t threshold) {
  if (sniff(path) == Container::unknown) {
    throw FormatError(path.filename().string() + ": not a PNG, JPEG or TIFF file");
  }
  cv::Mat img;
  try {
    img = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  } catch (const cv::Exception& e) {
    throw DecodeError(path.filename().string() + ": " + e.what());
  }
  if (img.empty()) throw DecodeError(path.filename().string() + ": decoding failed");

  if (img.depth() == CV_16U) {
    img.convertTo(img, CV_8U, 1.0 / 257.0);
  } else if (img.depth() != CV_8U) {
    throw DecodeError(path.filename().string() + ": unsupported sample depth");
  }
  int channels = img.channels();
  if (channels == 2) {
    cv::extractChannel(img, img, 0);
    channels = 1;
  }
  if (!img.isContinuous()) img = img.clone();
  std::span<const std::uint8_t> buf(img.ptr<std::uint8_t>(), img.total() * static_cast<std::size_t>(channels));
  BinaryMask mask = binarize_buffer(buf, img.cols, img.rows, channels, threshold);
  mask.set_source_name(path.filename().string());
  return mask;
}

}  // namespace cellshape::raster
