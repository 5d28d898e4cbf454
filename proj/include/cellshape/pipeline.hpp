#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellshape/featuremap.hpp"
#include "cellshape/nifti.hpp"
#include "cellshape/types.hpp"

namespace cellshape::pipeline {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPartialFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Mode { single, multi };

struct FeatureParams {
  double sigma = 1.0;
  int close_radius = 1;
  std::size_t n_samples = 128;
  double dp_epsilon = 2.0;
  int mpp_cell = 2;
  std::uint8_t threshold = 127;
};

struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path csv_file;
  /// Feature maps are skipped when unset.
  std::optional<std::filesystem::path> output;
  Mode mode = Mode::single;
  std::optional<std::filesystem::path> nifti_folder;
  FeatureParams params;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
  featuremap::FeatureMapSpec feature_map = featuremap::default_spec();
};

/// Throws UsageError on an inconsistent configuration.
void validate(const RunConfig& config);

struct FeatureRecord {
  std::string image_name;
  int contour_number = 0;
  std::optional<int> label;
  std::vector<std::pair<std::string, double>> features;
};

/// Feature column names in CSV order, excluding the identity columns.
const std::vector<std::string>& feature_columns();

struct ImageResult {
  std::vector<FeatureRecord> records;
  /// Non-fatal notes (skipped ROIs and the like).
  std::vector<std::string> notices;
};

/// Preprocess, label, trace and describe every outer contour of one mask.
/// With `labels`, each region takes the majority voxel value under its
/// pixels and regions voting 0 are skipped.
ImageResult extract_image(const BinaryMask& raw, const FeatureParams& params,
                          const nifti::NiftiLabelVolume* labels = nullptr);

/// Header row then records; the label column is present only in multi mode.
std::string format_csv(const std::vector<FeatureRecord>& records, Mode mode);

/// Full `extract` run. Returns the process exit code; diagnostics go to `diag`.
int run_extract(const RunConfig& config, std::ostream& diag);

struct CreateLabelConfig {
  std::filesystem::path folder_path;
  std::filesystem::path output_csv_folder;
  std::filesystem::path output_image_folder;
  std::uint8_t threshold = 127;
};

int run_create_label(const CreateLabelConfig& config, std::ostream& diag);

struct NiftiConfig {
  std::filesystem::path folder_path;
  std::filesystem::path input_csv_folder;
  std::filesystem::path nifti_save_dir;
  std::filesystem::path label_save_dir;
  std::uint8_t threshold = 127;
};

/// Builds, writes and verifies one NIfTI volume per mask. The per-file
/// verification report goes to `report`.
int run_nifti(const NiftiConfig& config, std::ostream& report, std::ostream& diag);

}  // namespace cellshape::pipeline
