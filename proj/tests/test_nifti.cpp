#include <gtest/gtest.h>

#include <cstring>
#include <random>

#include "cellshape/error.hpp"
#include "cellshape/nifti.hpp"
#include "synthetic.hpp"

namespace cellshape::nifti {
namespace {

NiftiLabelVolume random_volume(std::mt19937& rng, int max_label) {
  NiftiLabelVolume v;
  v.width = std::uniform_int_distribution<int>(1, 40)(rng);
  v.height = std::uniform_int_distribution<int>(1, 40)(rng);
  v.voxels.resize(static_cast<std::size_t>(v.width) * v.height);
  std::uniform_int_distribution<int> lab(0, max_label);
  for (auto& x : v.voxels) x = static_cast<std::uint16_t>(lab(rng));
  return v;
}

template <typename T>
T read_le(const std::vector<std::uint8_t>& b, std::size_t off) {
  T v;
  std::memcpy(&v, b.data() + off, sizeof v);
  return v;
}

template <typename T>
void write_le(std::vector<std::uint8_t>& b, std::size_t off, T v) {
  std::memcpy(b.data() + off, &v, sizeof v);
}

TEST(Nifti, HeaderLayout) {
  NiftiLabelVolume v;
  v.width = 5;
  v.height = 3;
  v.voxels.assign(15, 7);
  const auto b = encode_nifti(v);
  ASSERT_EQ(b.size(), 352u + 15 * 2);
  EXPECT_EQ(read_le<std::int32_t>(b, 0), 348);
  EXPECT_EQ(read_le<std::int16_t>(b, 40), 2);
  EXPECT_EQ(read_le<std::int16_t>(b, 42), 5);
  EXPECT_EQ(read_le<std::int16_t>(b, 44), 3);
  EXPECT_EQ(read_le<std::int16_t>(b, 46), 1);
  EXPECT_EQ(read_le<std::int16_t>(b, 70), kDtypeUint16);
  EXPECT_EQ(read_le<std::int16_t>(b, 72), 16);
  EXPECT_EQ(read_le<float>(b, 108), 352.0f);
  EXPECT_EQ(read_le<float>(b, 80), 1.0f);
  EXPECT_EQ(std::memcmp(b.data() + 344, "n+1\0", 4), 0);
  EXPECT_EQ(b[348] | b[349] | b[350] | b[351], 0);
  EXPECT_EQ(read_le<std::uint16_t>(b, 352), 7);
}

TEST(Nifti, RoundTripRandomVolumes) {
  std::mt19937 rng(100);
  const auto dir = cellshape::testing::temp_dir("nifti_rt");
  for (int i = 0; i < 20; ++i) {
    auto v = random_volume(rng, i % 2 ? 65535 : 3);
    v.description = "cells";
    v.pixdim_x = 0.5f;
    const auto path = dir / ("v" + std::to_string(i) + ".nii");
    write_nifti(v, path);
    const auto back = read_nifti(path);
    EXPECT_EQ(back.width, v.width);
    EXPECT_EQ(back.height, v.height);
    EXPECT_EQ(back.voxels, v.voxels);
    EXPECT_EQ(back.description, "cells");
    EXPECT_EQ(back.pixdim_x, 0.5f);
  }
}

TEST(Nifti, AcceptsUint8AndInt16) {
  NiftiLabelVolume v;
  v.width = 3;
  v.height = 2;
  v.voxels = {0, 1, 2, 3, 4, 5};
  auto b = encode_nifti(v);
  // Rewrite as uint8.
  std::vector<std::uint8_t> u8(b.begin(), b.begin() + 352);
  write_le<std::int16_t>(u8, 70, kDtypeUint8);
  write_le<std::int16_t>(u8, 72, 8);
  for (auto x : v.voxels) u8.push_back(static_cast<std::uint8_t>(x));
  const auto a = decode_nifti(u8);
  EXPECT_EQ(a.voxels, v.voxels);
  EXPECT_EQ(a.source_datatype, kDtypeUint8);

  write_le<std::int16_t>(b, 70, kDtypeInt16);
  EXPECT_EQ(decode_nifti(b).voxels, v.voxels);
  write_le<std::int16_t>(b, 352, std::int16_t{-1});
  EXPECT_THROW(decode_nifti(b), FormatError);
}

TEST(Nifti, RejectsBadInput) {
  NiftiLabelVolume v;
  v.width = 4;
  v.height = 4;
  v.voxels.assign(16, 1);
  const auto good = encode_nifti(v);

  EXPECT_THROW(decode_nifti(std::vector<std::uint8_t>(100)), FormatError);
  auto bad = good;
  write_le<std::int32_t>(bad, 0, 540);
  EXPECT_THROW(decode_nifti(bad), FormatError);
  bad = good;
  bad[345] = 'x';
  EXPECT_THROW(decode_nifti(bad), FormatError);
  bad = good;
  write_le<std::int16_t>(bad, 70, 16);  // float32
  EXPECT_THROW(decode_nifti(bad), UnsupportedDtypeError);
  for (std::size_t cut : {0ul, 10ul, 347ul, 352ul, good.size() - 1}) {
    std::vector<std::uint8_t> t(good.begin(), good.begin() + cut);
    EXPECT_THROW(decode_nifti(t), FormatError) << cut;
  }
  EXPECT_THROW(read_nifti(cellshape::testing::temp_dir("nifti_missing") / "none.nii"), Error);
}

TEST(Nifti, FlipRows) {
  std::mt19937 rng(5);
  const auto v = random_volume(rng, 9);
  const auto f = flip_rows(v);
  for (int y = 0; y < v.height; ++y)
    for (int x = 0; x < v.width; ++x) EXPECT_EQ(f.at(x, y), v.at(x, v.height - 1 - y));
  EXPECT_EQ(flip_rows(f).voxels, v.voxels);
}

TEST(Nifti, ImageAccessorIsBottomUp) {
  NiftiLabelVolume v;
  v.width = 2;
  v.height = 3;
  v.voxels = {1, 2, 3, 4, 5, 6};
  EXPECT_EQ(v.at_image(0, 2), 1);
  EXPECT_EQ(v.at_image(1, 0), 6);
}

}  // namespace
}  // namespace cellshape::nifti
