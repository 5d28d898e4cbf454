// Compiled with -mavx2 only (no FMA) so per-lane arithmetic matches the
// scalar reference bit for bit.

#include "cellshape/kernels.hpp"

#include <immintrin.h>

namespace cellshape::kernels {
namespace {

void store_mask8(int bits, std::uint8_t* out) {
  for (int j = 0; j < 8; ++j) out[j] = static_cast<std::uint8_t>((bits >> j) & 1);
}

void bgr_luma_above(const std::uint8_t* bgr, std::size_t n, std::uint8_t threshold, std::uint8_t* out) {
  const int bound = 1000 * (static_cast<int>(threshold) + 1);
  const __m256i offsets = _mm256_setr_epi32(0, 3, 6, 9, 12, 15, 18, 21);
  const __m256i low_byte = _mm256_set1_epi32(0xff);
  const __m256i wb = _mm256_set1_epi32(114);
  const __m256i wg = _mm256_set1_epi32(587);
  const __m256i wr = _mm256_set1_epi32(299);
  const __m256i limit = _mm256_set1_epi32(bound - 1);
  std::size_t i = 0;
  // The 32-bit gather of the last lane touches one byte past pixel i + 7.
  for (; i + 8 < n; i += 8) {
    const __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(bgr + 3 * i), offsets, 1);
    const __m256i b = _mm256_and_si256(v, low_byte);
    const __m256i g = _mm256_and_si256(_mm256_srli_epi32(v, 8), low_byte);
    const __m256i r = _mm256_and_si256(_mm256_srli_epi32(v, 16), low_byte);
    const __m256i s = _mm256_add_epi32(_mm256_add_epi32(_mm256_mullo_epi32(b, wb), _mm256_mullo_epi32(g, wg)),
                                       _mm256_mullo_epi32(r, wr));
    const __m256i above = _mm256_cmpgt_epi32(s, limit);
    store_mask8(_mm256_movemask_ps(_mm256_castsi256_ps(above)), out + i);
  }
  for (; i < n; ++i) {
    const int s = 114 * bgr[3 * i] + 587 * bgr[3 * i + 1] + 299 * bgr[3 * i + 2];
    out[i] = s >= bound ? 1 : 0;
  }
}

void gray_above(const std::uint8_t* gray, std::size_t n, std::uint8_t threshold, std::uint8_t* out) {
  std::size_t i = 0;
  if (threshold < 255) {
    const __m256i floor_value = _mm256_set1_epi8(static_cast<char>(threshold + 1));
    const __m256i one = _mm256_set1_epi8(1);
    for (; i + 32 <= n; i += 32) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gray + i));
      const __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(v, floor_value), v);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_and_si256(ge, one));
    }
  }
  for (; i < n; ++i) out[i] = gray[i] > threshold ? 1 : 0;
}

void convolve_padded_row(const float* padded, const float* weights, std::size_t taps, float* out,
                         std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 acc = _mm256_setzero_ps();
    for (std::size_t k = 0; k < taps; ++k) {
      acc = _mm256_add_ps(acc, _mm256_mul_ps(_mm256_set1_ps(weights[k]), _mm256_loadu_ps(padded + i + k)));
    }
    _mm256_storeu_ps(out + i, acc);
  }
  for (; i < n; ++i) {
    float acc = 0.0f;
    for (std::size_t k = 0; k < taps; ++k) acc += weights[k] * padded[i + k];
    out[i] = acc;
  }
}

void convolve_rows(const float* const* rows, const float* weights, std::size_t taps, float* out,
                   std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 acc = _mm256_setzero_ps();
    for (std::size_t k = 0; k < taps; ++k) {
      acc = _mm256_add_ps(acc, _mm256_mul_ps(_mm256_set1_ps(weights[k]), _mm256_loadu_ps(rows[k] + i)));
    }
    _mm256_storeu_ps(out + i, acc);
  }
  for (; i < n; ++i) {
    float acc = 0.0f;
    for (std::size_t k = 0; k < taps; ++k) acc += weights[k] * rows[k][i];
    out[i] = acc;
  }
}

void threshold_at_least(const float* in, std::size_t n, float level, std::uint8_t* out) {
  const __m256 lv = _mm256_set1_ps(level);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    store_mask8(_mm256_movemask_ps(_mm256_cmp_ps(_mm256_loadu_ps(in + i), lv, _CMP_GE_OQ)), out + i);
  }
  for (; i < n; ++i) out[i] = in[i] >= level ? 1 : 0;
}

template <bool Max>
__m256i combine(__m256i a, __m256i b) {
  if constexpr (Max) {
    return _mm256_max_epu8(a, b);
  } else {
    return _mm256_min_epu8(a, b);
  }
}

template <bool Max>
void window_padded(const std::uint8_t* padded, std::size_t taps, std::uint8_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(padded + i));
    for (std::size_t k = 1; k < taps; ++k) {
      acc = combine<Max>(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(padded + i + k)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  for (; i < n; ++i) {
    std::uint8_t v = padded[i];
    for (std::size_t k = 1; k < taps; ++k) {
      const std::uint8_t w = padded[i + k];
      v = Max ? (w > v ? w : v) : (w < v ? w : v);
    }
    out[i] = v;
  }
}

template <bool Max>
void rows_reduce(const std::uint8_t* const* rows, std::size_t count, std::uint8_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows[0] + i));
    for (std::size_t k = 1; k < count; ++k) {
      acc = combine<Max>(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows[k] + i)));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  for (; i < n; ++i) {
    std::uint8_t v = rows[0][i];
    for (std::size_t k = 1; k < count; ++k) {
      const std::uint8_t w = rows[k][i];
      v = Max ? (w > v ? w : v) : (w < v ? w : v);
    }
    out[i] = v;
  }
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{
      Isa::avx2,
      "avx2",
      bgr_luma_above,
      gray_above,
      convolve_padded_row,
      convolve_rows,
      threshold_at_least,
      window_padded<true>,
      window_padded<false>,
      rows_reduce<true>,
      rows_reduce<false>,
  };
  return table;
}

}  // namespace cellshape::kernels
