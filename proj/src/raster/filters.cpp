#include <cmath>
#include <vector>

#include "cellshape/error.hpp"
#include "cellshape/kernels.hpp"
#include "cellshape/raster.hpp"

namespace cellshape::raster {
namespace {

// Symmetric reflection: ... c b a | a b c ... | c b a ...
std::size_t reflect(long i, long n) {
  const long period = 2 * n;
  long m = i % period;
  if (m < 0) m += period;
  if (m >= n) m = period - 1 - m;
  return static_cast<std::size_t>(m);
}

enum class Reduce { max, min };

BinaryMask square_filter(const BinaryMask& mask, int radius, Reduce op) {
  if (radius < 1) throw Error("structuring element radius must be >= 1");
  const auto& k = kernels::active_kernels();
  const auto w = static_cast<std::size_t>(mask.width());
  const auto h = static_cast<std::size_t>(mask.height());
  const auto r = static_cast<std::size_t>(radius);
  const std::size_t taps = 2 * r + 1;
  const auto src = mask.pixels();

  std::vector<std::uint8_t> tmp(w * h);
  std::vector<std::uint8_t> padded(w + 2 * r, 0);
  for (std::size_t y = 0; y < h; ++y) {
    std::copy_n(src.data() + y * w, w, padded.data() + r);
    if (op == Reduce::max) {
      k.window_max_padded(padded.data(), taps, tmp.data() + y * w, w);
    } else {
      k.window_min_padded(padded.data(), taps, tmp.data() + y * w, w);
    }
  }

  const std::vector<std::uint8_t> zero_row(w, 0);
  std::vector<const std::uint8_t*> rows(taps);
  std::vector<std::uint8_t> out(w * h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t t = 0; t < taps; ++t) {
      const long yy = static_cast<long>(y + t) - static_cast<long>(r);
      rows[t] = (yy < 0 || yy >= static_cast<long>(h)) ? zero_row.data() : tmp.data() + static_cast<std::size_t>(yy) * w;
    }
    if (op == Reduce::max) {
      k.rows_max(rows.data(), taps, out.data() + y * w, w);
    } else {
      k.rows_min(rows.data(), taps, out.data() + y * w, w);
    }
  }
  return BinaryMask(mask.width(), mask.height(), std::move(out), mask.source_name());
}

}  // namespace

std::vector<float> gaussian_kernel(double sigma) {
  if (!(sigma > 0.0)) throw Error("gaussian sigma must be positive");
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double v = std::exp(-static_cast<double>(i * i) / (2.0 * sigma * sigma));
    taps[static_cast<std::size_t>(i + radius)] = v;
    sum += v;
  }
  std::vector<float> out(taps.size());
  for (std::size_t i = 0; i < taps.size(); ++i) out[i] = static_cast<float>(taps[i] / sum);
  return out;
}

BinaryMask gaussian_blur_then_rebinarize(const BinaryMask& mask, double sigma) {
  const std::vector<float> weights = gaussian_kernel(sigma);
  const auto& k = kernels::active_kernels();
  const auto w = static_cast<std::size_t>(mask.width());
  const auto h = static_cast<std::size_t>(mask.height());
  const std::size_t taps = weights.size();
  const long r = static_cast<long>(taps / 2);
  const auto src = mask.pixels();

  std::vector<float> horizontal(w * h);
  std::vector<float> padded(w + taps - 1);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t j = 0; j < padded.size(); ++j) {
      padded[j] = static_cast<float>(src[y * w + reflect(static_cast<long>(j) - r, static_cast<long>(w))]);
    }
    k.convolve_padded_row(padded.data(), weights.data(), taps, horizontal.data() + y * w, w);
  }

  std::vector<const float*> rows(taps);
  std::vector<float> line(w);
  std::vector<std::uint8_t> out(w * h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t t = 0; t < taps; ++t) {
      rows[t] = horizontal.data() + reflect(static_cast<long>(y + t) - r, static_cast<long>(h)) * w;
    }
    k.convolve_rows(rows.data(), weights.data(), taps, line.data(), w);
    k.threshold_at_least(line.data(), w, 0.5f, out.data() + y * w);
  }
  return BinaryMask(mask.width(), mask.height(), std::move(out), mask.source_name());
}

BinaryMask dilate(const BinaryMask& mask, int radius) { return square_filter(mask, radius, Reduce::max); }

BinaryMask erode(const BinaryMask& mask, int radius) { return square_filter(mask, radius, Reduce::min); }

BinaryMask morphological_close(const BinaryMask& mask, int kernel_radius) {
  return erode(dilate(mask, kernel_radius), kernel_radius);
}

BinaryMask preprocess(const BinaryMask& mask, double sigma, int close_radius) {
  return morphological_close(gaussian_blur_then_rebinarize(mask, sigma), close_radius);
}

}  // namespace cellshape::raster
