#pragma once

// Data-parallel inner loops of the preprocessing chain. Each entry has a
// portable scalar reference and, on x86-64, an AVX2 variant. Both variants
// are required to produce bit-identical output.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cellshape::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;

  /// out[i] = 1 iff integer luma (299 R + 587 G + 114 B) / 1000 of the
  /// interleaved BGR triple i exceeds threshold.
  void (*bgr_luma_above)(const std::uint8_t* bgr, std::size_t n, std::uint8_t threshold, std::uint8_t* out);

  /// out[i] = 1 iff gray[i] > threshold.
  void (*gray_above)(const std::uint8_t* gray, std::size_t n, std::uint8_t threshold, std::uint8_t* out);

  /// out[i] = sum_k weights[k] * padded[i + k], k ascending.
  void (*convolve_padded_row)(const float* padded, const float* weights, std::size_t taps, float* out,
                              std::size_t n);

  /// out[i] = sum_k weights[k] * rows[k][i], k ascending.
  void (*convolve_rows)(const float* const* rows, const float* weights, std::size_t taps, float* out,
                        std::size_t n);

  /// out[i] = 1 iff in[i] >= level.
  void (*threshold_at_least)(const float* in, std::size_t n, float level, std::uint8_t* out);

  /// out[i] = max / min over padded[i .. i + taps).
  void (*window_max_padded)(const std::uint8_t* padded, std::size_t taps, std::uint8_t* out, std::size_t n);
  void (*window_min_padded)(const std::uint8_t* padded, std::size_t taps, std::uint8_t* out, std::size_t n);

  /// out[i] = max / min over rows[k][i] for k < count.
  void (*rows_max)(const std::uint8_t* const* rows, std::size_t count, std::uint8_t* out, std::size_t n);
  void (*rows_min)(const std::uint8_t* const* rows, std::size_t count, std::uint8_t* out, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Best table for the running CPU unless overridden. Setting the environment
/// variable CELLSHAPE_ISA=scalar forces the reference kernels.
const KernelTable& active_kernels();

/// Pins the table returned by active_kernels(); passing nullptr restores auto selection.
void override_kernels(const KernelTable* table);

}  // namespace cellshape::kernels
