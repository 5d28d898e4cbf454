#include "cellshape/kernels.hpp"

#include <algorithm>

namespace cellshape::kernels {
namespace {

void bgr_luma_above(const std::uint8_t* bgr, std::size_t n, std::uint8_t threshold, std::uint8_t* out) {
  // Y > t  <=>  floor(s / 1000) > t  <=>  s >= 1000 * (t + 1)
  const int bound = 1000 * (static_cast<int>(threshold) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const int s = 114 * bgr[3 * i] + 587 * bgr[3 * i + 1] + 299 * bgr[3 * i + 2];
    out[i] = s >= bound ? 1 : 0;
  }
}

void gray_above(const std::uint8_t* gray, std::size_t n, std::uint8_t threshold, std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = gray[i] > threshold ? 1 : 0;
}

void convolve_padded_row(const float* padded, const float* weights, std::size_t taps, float* out,
                         std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    float acc = 0.0f;
    for (std::size_t k = 0; k < taps; ++k) acc += weights[k] * padded[i + k];
    out[i] = acc;
  }
}

void convolve_rows(const float* const* rows, const float* weights, std::size_t taps, float* out,
                   std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    float acc = 0.0f;
    for (std::size_t k = 0; k < taps; ++k) acc += weights[k] * rows[k][i];
    out[i] = acc;
  }
}

void threshold_at_least(const float* in, std::size_t n, float level, std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = in[i] >= level ? 1 : 0;
}

void window_max_padded(const std::uint8_t* padded, std::size_t taps, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = *std::max_element(padded + i, padded + i + taps);
}

void window_min_padded(const std::uint8_t* padded, std::size_t taps, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = *std::min_element(padded + i, padded + i + taps);
}

void rows_max(const std::uint8_t* const* rows, std::size_t count, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t v = rows[0][i];
    for (std::size_t k = 1; k < count; ++k) v = std::max(v, rows[k][i]);
    out[i] = v;
  }
}

void rows_min(const std::uint8_t* const* rows, std::size_t count, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t v = rows[0][i];
    for (std::size_t k = 1; k < count; ++k) v = std::min(v, rows[k][i]);
    out[i] = v;
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      Isa::scalar,       "scalar",          bgr_luma_above,    gray_above, convolve_padded_row,
      convolve_rows,     threshold_at_least, window_max_padded, window_min_padded, rows_max,
      rows_min,
  };
  return table;
}

}  // namespace cellshape::kernels
