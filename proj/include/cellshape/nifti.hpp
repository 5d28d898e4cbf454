#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace cellshape::nifti {

inline constexpr std::int32_t kHeaderSize = 348;
inline constexpr std::int32_t kVoxOffset = 352;
inline constexpr std::int16_t kDtypeUint8 = 2;
inline constexpr std::int16_t kDtypeInt16 = 4;
inline constexpr std::int16_t kDtypeUint16 = 512;

/// 2-D label raster in NIfTI voxel order: index = x + vy * width, where
/// voxel row vy = 0 is the bottom image row.
struct NiftiLabelVolume {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> voxels;
  /// Header fields carried through a read/write cycle.
  float pixdim_x = 1.0f;
  float pixdim_y = 1.0f;
  std::string description;
  /// Datatype code found on disk; writes always use kDtypeUint16.
  std::int16_t source_datatype = kDtypeUint16;

  std::uint16_t at(int x, int vy) const {
    return voxels[static_cast<std::size_t>(vy) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
  }
  /// Label under image pixel (x, y) with y counted from the top row.
  std::uint16_t at_image(int x, int y) const { return at(x, height - 1 - y); }
};

/// Single-file NIfTI-1 (.nii): 348-byte little-endian header, 4 zero
/// extension bytes, uint16 voxels from byte 352.
std::vector<std::uint8_t> encode_nifti(const NiftiLabelVolume& volume);

/// Accepts datatypes uint8, int16 (non-negative) and uint16. Throws
/// FormatError on bad size, magic or truncation and UnsupportedDtypeError
/// on other datatypes.
NiftiLabelVolume decode_nifti(std::span<const std::uint8_t> bytes);

void write_nifti(const NiftiLabelVolume& volume, const std::filesystem::path& path);
NiftiLabelVolume read_nifti(const std::filesystem::path& path);

/// Reverses row order; applying it twice is the identity.
NiftiLabelVolume flip_rows(const NiftiLabelVolume& volume);

}  // namespace cellshape::nifti
