#include "cellshape/nifti.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "cellshape/error.hpp"

namespace cellshape::nifti {
namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

// Field offsets within the 348-byte NIfTI-1 header.
constexpr std::size_t kOffSizeofHdr = 0;
constexpr std::size_t kOffRegular = 38;
constexpr std::size_t kOffDim = 40;
constexpr std::size_t kOffDatatype = 70;
constexpr std::size_t kOffBitpix = 72;
constexpr std::size_t kOffPixdim = 76;
constexpr std::size_t kOffVoxOffset = 108;
constexpr std::size_t kOffSclSlope = 112;
constexpr std::size_t kOffXyztUnits = 123;
constexpr std::size_t kOffCalMax = 124;
constexpr std::size_t kOffDescrip = 148;
constexpr std::size_t kOffQformCode = 252;
constexpr std::size_t kOffSformCode = 254;
constexpr std::size_t kOffSrowX = 280;
constexpr std::size_t kOffSrowY = 296;
constexpr std::size_t kOffSrowZ = 312;
constexpr std::size_t kOffMagic = 344;
constexpr std::size_t kDescripLen = 80;

template <typename T>
void put(std::vector<std::uint8_t>& buf, std::size_t off, T value) {
  auto bits = std::bit_cast<std::array<std::uint8_t, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) std::reverse(bits.begin(), bits.end());
  std::copy(bits.begin(), bits.end(), buf.begin() + static_cast<std::ptrdiff_t>(off));
}

template <typename T>
T get(std::span<const std::uint8_t> buf, std::size_t off) {
  std::array<std::uint8_t, sizeof(T)> bits{};
  std::copy_n(buf.begin() + static_cast<std::ptrdiff_t>(off), sizeof(T), bits.begin());
  if constexpr (std::endian::native == std::endian::big) std::reverse(bits.begin(), bits.end());
  return std::bit_cast<T>(bits);
}

}  // namespace

std::vector<std::uint8_t> encode_nifti(const NiftiLabelVolume& volume) {
  if (volume.width < 1 || volume.height < 1 || volume.width > 32767 || volume.height > 32767) {
    throw FormatError("NIfTI-1 dimensions must lie in [1, 32767]");
  }
  const auto count = static_cast<std::size_t>(volume.width) * static_cast<std::size_t>(volume.height);
  if (volume.voxels.size() != count) throw FormatError("voxel buffer does not match dimensions");

  std::vector<std::uint8_t> buf(static_cast<std::size_t>(kVoxOffset) + 2 * count, 0);
  put<std::int32_t>(buf, kOffSizeofHdr, kHeaderSize);
  buf[kOffRegular] = 'r';
  const std::int16_t dim[8] = {2, static_cast<std::int16_t>(volume.width), static_cast<std::int16_t>(volume.height), 1, 1, 1, 1, 1};
  for (std::size_t i = 0; i < 8; ++i) put<std::int16_t>(buf, kOffDim + 2 * i, dim[i]);
  put<std::int16_t>(buf, kOffDatatype, kDtypeUint16);
  put<std::int16_t>(buf, kOffBitpix, 16);
  const float pixdim[8] = {1.0f, volume.pixdim_x, volume.pixdim_y, 1.0f, 1.0f, 1.0f, 1.0f, 1.0f};
  for (std::size_t i = 0; i < 8; ++i) put<float>(buf, kOffPixdim + 4 * i, pixdim[i]);
  put<float>(buf, kOffVoxOffset, static_cast<float>(kVoxOffset));
  put<float>(buf, kOffSclSlope, 1.0f);
  buf[kOffXyztUnits] = 0;
  std::uint16_t vmax = 0;
  for (const auto v : volume.voxels) vmax = std::max(vmax, v);
  put<float>(buf, kOffCalMax, static_cast<float>(vmax));
  std::memcpy(buf.data() + kOffDescrip, volume.description.data(), std::min(volume.description.size(), kDescripLen - 1));
  put<std::int16_t>(buf, kOffQformCode, 0);
  put<std::int16_t>(buf, kOffSformCode, 1);
  const float srow[3][4] = {{volume.pixdim_x, 0, 0, 0}, {0, volume.pixdim_y, 0, 0}, {0, 0, 1, 0}};
  for (std::size_t i = 0; i < 4; ++i) {
    put<float>(buf, kOffSrowX + 4 * i, srow[0][i]);
    put<float>(buf, kOffSrowY + 4 * i, srow[1][i]);
    put<float>(buf, kOffSrowZ + 4 * i, srow[2][i]);
  }
  const char magic[4] = {'n', '+', '1', '\0'};
  std::memcpy(buf.data() + kOffMagic, magic, 4);
  for (std::size_t i = 0; i < count; ++i) put<std::uint16_t>(buf, static_cast<std::size_t>(kVoxOffset) + 2 * i, volume.voxels[i]);
  return buf;
}

NiftiLabelVolume decode_nifti(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < static_cast<std::size_t>(kHeaderSize)) throw FormatError("NIfTI file shorter than its header");
  if (get<std::int32_t>(bytes, kOffSizeofHdr) != kHeaderSize) throw FormatError("sizeof_hdr is not 348 (little-endian)");
  if (std::memcmp(bytes.data() + kOffMagic, "n+1\0", 4) != 0) throw FormatError("magic is not \"n+1\"");

  std::int16_t dim[8];
  for (std::size_t i = 0; i < 8; ++i) dim[i] = get<std::int16_t>(bytes, kOffDim + 2 * i);
  if (dim[0] < 2 || dim[0] > 7 || dim[1] < 1 || dim[2] < 1) throw FormatError("unsupported NIfTI dimensions");
  for (int i = 3; i <= dim[0]; ++i) {
    if (dim[i] != 1) throw FormatError("only 2-D NIfTI volumes are supported");
  }
  const auto datatype = get<std::int16_t>(bytes, kOffDatatype);
  std::size_t bytes_per_voxel = 0;
  switch (datatype) {
    case kDtypeUint8: bytes_per_voxel = 1; break;
    case kDtypeInt16:
    case kDtypeUint16: bytes_per_voxel = 2; break;
    default: throw UnsupportedDtypeError("unsupported NIfTI datatype code " + std::to_string(datatype));
  }
  const float vox_offset = get<float>(bytes, kOffVoxOffset);
  if (!(vox_offset >= static_cast<float>(kHeaderSize)) || vox_offset != static_cast<float>(static_cast<std::size_t>(vox_offset))) {
    throw FormatError("invalid vox_offset");
  }
  const auto offset = static_cast<std::size_t>(vox_offset);

  NiftiLabelVolume vol;
  vol.width = dim[1];
  vol.height = dim[2];
  vol.source_datatype = datatype;
  vol.pixdim_x = get<float>(bytes, kOffPixdim + 4);
  vol.pixdim_y = get<float>(bytes, kOffPixdim + 8);
  const char* descr = reinterpret_cast<const char*>(bytes.data() + kOffDescrip);
  vol.description.assign(descr, strnlen(descr, kDescripLen));

  const auto count = static_cast<std::size_t>(vol.width) * static_cast<std::size_t>(vol.height);
  if (bytes.size() < offset + count * bytes_per_voxel) throw FormatError("NIfTI voxel data is truncated");
  vol.voxels.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t at = offset + i * bytes_per_voxel;
    if (datatype == kDtypeUint8) {
      vol.voxels[i] = bytes[at];
    } else if (datatype == kDtypeInt16) {
      const auto v = get<std::int16_t>(bytes, at);
      if (v < 0) throw FormatError("negative label in int16 NIfTI volume");
      vol.voxels[i] = static_cast<std::uint16_t>(v);
    } else {
      vol.voxels[i] = get<std::uint16_t>(bytes, at);
    }
  }
  return vol;
}

void write_nifti(const NiftiLabelVolume& volume, const std::filesystem::path& path) {
  const auto bytes = encode_nifti(volume);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for " + path.string());
}

NiftiLabelVolume read_nifti(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DecodeError("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return decode_nifti(bytes);
  } catch (const FormatError& e) {
    if (dynamic_cast<const UnsupportedDtypeError*>(&e) != nullptr) {
      throw UnsupportedDtypeError(path.filename().string() + ": " + e.what());
    }
    throw FormatError(path.filename().string() + ": " + e.what());
  }
}

NiftiLabelVolume flip_rows(const NiftiLabelVolume& volume) {
  NiftiLabelVolume out = volume;
  const auto w = static_cast<std::size_t>(volume.width);
  for (int y = 0; y < volume.height; ++y) {
    const auto src = static_cast<std::size_t>(y) * w;
    const auto dst = static_cast<std::size_t>(volume.height - 1 - y) * w;
    std::copy_n(volume.voxels.begin() + static_cast<std::ptrdiff_t>(src), w, out.voxels.begin() + static_cast<std::ptrdiff_t>(dst));
  }
  return out;
}

}  // namespace cellshape::nifti
