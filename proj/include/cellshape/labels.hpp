#pragma once

#include <filesystem>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cellshape/nifti.hpp"
#include "cellshape/types.hpp"

namespace cellshape::labels {

inline constexpr std::string_view kTableHeader = "cell_id,centroid_x,centroid_y,final_label";

struct LabelTableRow {
  int cell_id = 0;
  double centroid_x = 0.0;
  double centroid_y = 0.0;
  int final_label = 0;
};

struct TemplateRow {
  int cell_id = 0;
  double centroid_x = 0.0;
  double centroid_y = 0.0;
};

/// One row per region with its pixel centroid; cell_id is the component label.
std::vector<TemplateRow> template_rows(const LabeledMask& labeled);

/// Header plus one row per region with an empty final_label column.
std::string format_template_csv(std::span<const TemplateRow> rows);

/// RGB rendering of the mask with each cell_id drawn at its centroid, as PNG bytes.
std::vector<std::uint8_t> render_template_overlay(const BinaryMask& mask, std::span<const TemplateRow> rows);

struct FolderReport {
  std::size_t processed = 0;
  std::size_t failed = 0;
};

/// Writes <stem>.csv and <stem>_labeled.png for every mask in the folder.
/// Per-file failures go to `diag` and do not stop the batch.
FolderReport create_label_template(const std::filesystem::path& mask_folder, const std::filesystem::path& csv_out_folder,
                                   const std::filesystem::path& image_out_folder, std::ostream& diag,
                                   std::uint8_t threshold = 127);

/// Parses an annotated table. Columns are located by header name.
std::vector<LabelTableRow> parse_label_table(std::string_view text, std::string_view source = "table");
std::vector<LabelTableRow> read_label_table(const std::filesystem::path& csv_path);

/// Relabels each connected region of `mask` from its cell_id to its
/// final_label and stores rows bottom-up (image row 0 -> voxel row H-1).
/// Throws MissingLabelError listing every region absent from the table.
nifti::NiftiLabelVolume build_label_volume(const BinaryMask& mask, std::span<const LabelTableRow> table);

struct ConsistencyReport {
  std::set<int> expected;
  std::set<int> found;
  std::set<int> missing;
  std::set<int> extra;
  bool consistent = true;
};

ConsistencyReport verify_labels(const nifti::NiftiLabelVolume& volume, std::span<const LabelTableRow> table);

std::string describe(const ConsistencyReport& report);

/// Upright colour preview of a label volume, as PNG bytes.
std::vector<std::uint8_t> render_label_preview(const nifti::NiftiLabelVolume& volume);

}  // namespace cellshape::labels
