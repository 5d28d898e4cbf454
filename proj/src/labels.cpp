#include "cellshape/labels.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include <opencv2/imgproc.hpp>

#include "cellshape/csv.hpp"
#include "cellshape/error.hpp"
#include "cellshape/files.hpp"
#include "cellshape/raster.hpp"
#include "render_util.hpp"

namespace cellshape::labels {
namespace {

bool parse_int(const std::string& s, long& out) {
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, out);
  if (res.ec == std::errc() && res.ptr == end) return true;
  // Integral decimals such as "2.0" are accepted.
  double d = 0.0;
  const auto resd = std::from_chars(s.data(), end, d);
  if (resd.ec != std::errc() || resd.ptr != end || !std::isfinite(d) || d != std::floor(d)) return false;
  if (std::abs(d) > 2e9) return false;
  out = static_cast<long>(d);
  return true;
}

bool parse_real(const std::string& s, double& out) {
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, out);
  return res.ec == std::errc() && res.ptr == end && std::isfinite(out);
}

std::string join(const std::set<int>& values) {
  std::string out;
  for (const int v : values) {
    if (!out.empty()) out += ", ";
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

std::vector<TemplateRow> template_rows(const LabeledMask& labeled) {
  const auto n = static_cast<std::size_t>(labeled.num_regions);
  std::vector<double> sx(n + 1, 0.0), sy(n + 1, 0.0);
  std::vector<std::size_t> count(n + 1, 0);
  for (int y = 0; y < labeled.height; ++y) {
    for (int x = 0; x < labeled.width; ++x) {
      const auto l = static_cast<std::size_t>(labeled.at(x, y));
      if (l == 0) continue;
      sx[l] += x;
      sy[l] += y;
      ++count[l];
    }
  }
  std::vector<TemplateRow> rows;
  for (std::size_t l = 1; l <= n; ++l) {
    const auto c = static_cast<double>(count[l]);
    rows.push_back({static_cast<int>(l), sx[l] / c, sy[l] / c});
  }
  return rows;
}

std::string format_template_csv(std::span<const TemplateRow> rows) {
  std::string out(kTableHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.cell_id) + ',' + csv::format_number(r.centroid_x) + ',' + csv::format_number(r.centroid_y) + ",\n";
  }
  return out;
}

std::vector<std::uint8_t> render_template_overlay(const BinaryMask& mask, std::span<const TemplateRow> rows) {
  cv::Mat img = detail::mask_to_bgr(mask);
  const double scale = std::max(0.35, std::min(mask.width(), mask.height()) / 500.0);
  const int thickness = scale >= 1.0 ? 2 : 1;
  for (const auto& r : rows) {
    const std::string text = std::to_string(r.cell_id);
    int baseline = 0;
    const cv::Size size = cv::getTextSize(text, cv::FONT_HERSHEY_SIMPLEX, scale, thickness, &baseline);
    const cv::Point origin(static_cast<int>(std::lround(r.centroid_x)) - size.width / 2,
                           static_cast<int>(std::lround(r.centroid_y)) + size.height / 2);
    cv::putText(img, text, origin, cv::FONT_HERSHEY_SIMPLEX, scale, cv::Scalar(0, 0, 255), thickness, cv::LINE_8);
  }
  return detail::encode_png(img);
}

FolderReport create_label_template(const std::filesystem::path& mask_folder, const std::filesystem::path& csv_out_folder,
                                   const std::filesystem::path& image_out_folder, std::ostream& diag,
                                   std::uint8_t threshold) {
  FolderReport report;
  for (const auto& path : files::list_mask_files(mask_folder)) {
    try {
      const BinaryMask mask = raster::decode_mask(path, threshold);
      const auto rows = template_rows(raster::label_components(mask));
      const std::string stem = path.stem().string();
      files::write_text(csv_out_folder / (stem + ".csv"), format_template_csv(rows));
      files::write_bytes(image_out_folder / (stem + "_labeled.png"), render_template_overlay(mask, rows));
      ++report.processed;
    } catch (const std::exception& e) {
      diag << "error: " << path.filename().string() << ": " << e.what() << '\n';
      ++report.failed;
    }
  }
  return report;
}

std::vector<LabelTableRow> parse_label_table(std::string_view text, std::string_view source) {
  const auto lines = csv::split_lines(text);
  const std::string where(source);
  if (lines.empty()) throw SchemaError(where + ": missing header row");
  std::string header_line = lines.front();
  if (header_line.rfind("\xEF\xBB\xBF", 0) == 0) header_line.erase(0, 3);
  const auto header = csv::split_record(header_line);
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.size(); ++i) column.emplace(header[i], i);
  const char* required[] = {"cell_id", "centroid_x", "centroid_y", "final_label"};
  for (const char* name : required) {
    if (column.count(name) == 0) throw SchemaError(where + ": missing header '" + name + "'");
  }

  std::vector<LabelTableRow> rows;
  std::set<int> seen;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto fields = csv::split_record(lines[li]);
    auto field = [&](const char* name) -> std::string {
      const std::size_t idx = column.at(name);
      return idx < fields.size() ? fields[idx] : std::string{};
    };
    long cell = 0;
    if (!parse_int(field("cell_id"), cell) || cell < 1) {
      throw ValidationError(where + ": line " + std::to_string(li + 1) + ": cell_id must be a positive integer");
    }
    LabelTableRow row;
    row.cell_id = static_cast<int>(cell);
    const std::string cell_name = "cell_id " + std::to_string(row.cell_id);
    if (!parse_real(field("centroid_x"), row.centroid_x) || !parse_real(field("centroid_y"), row.centroid_y)) {
      throw ValidationError(where + ": " + cell_name + ": centroid is not numeric");
    }
    const std::string label = field("final_label");
    if (label.empty()) throw ValidationError(where + ": " + cell_name + ": final_label is empty");
    long final_label = 0;
    if (!parse_int(label, final_label)) {
      throw ValidationError(where + ": " + cell_name + ": final_label '" + label + "' is not a whole number");
    }
    if (final_label < 0 || final_label > 65535) {
      throw ValidationError(where + ": " + cell_name + ": final_label must lie in [0, 65535]");
    }
    row.final_label = static_cast<int>(final_label);
    if (!seen.insert(row.cell_id).second) throw DuplicateError(where + ": duplicate " + cell_name);
    rows.push_back(row);
  }
  return rows;
}

std::vector<LabelTableRow> read_label_table(const std::filesystem::path& csv_path) {
  return parse_label_table(files::read_text(csv_path), csv_path.filename().string());
}

nifti::NiftiLabelVolume build_label_volume(const BinaryMask& mask, std::span<const LabelTableRow> table) {
  const LabeledMask labeled = raster::label_components(mask);
  std::map<int, int> final_of;
  for (const auto& r : table) final_of[r.cell_id] = r.final_label;
  std::set<int> missing;
  for (int l = 1; l <= labeled.num_regions; ++l) {
    if (final_of.count(l) == 0) missing.insert(l);
  }
  if (!missing.empty()) throw MissingLabelError("no label for cell_id " + join(missing));

  nifti::NiftiLabelVolume vol;
  vol.width = mask.width();
  vol.height = mask.height();
  vol.voxels.assign(static_cast<std::size_t>(vol.width) * static_cast<std::size_t>(vol.height), 0);
  for (int y = 0; y < labeled.height; ++y) {
    const auto vy = static_cast<std::size_t>(vol.height - 1 - y);
    for (int x = 0; x < labeled.width; ++x) {
      const int l = labeled.at(x, y);
      if (l != 0) vol.voxels[vy * static_cast<std::size_t>(vol.width) + static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(final_of[l]);
    }
  }
  return vol;
}

ConsistencyReport verify_labels(const nifti::NiftiLabelVolume& volume, std::span<const LabelTableRow> table) {
  ConsistencyReport r;
  for (const auto& row : table) {
    if (row.final_label != 0) r.expected.insert(row.final_label);
  }
  for (const auto v : volume.voxels) {
    if (v != 0) r.found.insert(v);
  }
  for (const int e : r.expected) {
    if (r.found.count(e) == 0) r.missing.insert(e);
  }
  for (const int f : r.found) {
    if (r.expected.count(f) == 0) r.extra.insert(f);
  }
  r.consistent = r.missing.empty() && r.extra.empty();
  return r;
}

std::string describe(const ConsistencyReport& report) {
  if (report.consistent) return "consistent (labels: " + join(report.found) + ")";
  std::ostringstream out;
  out << "inconsistent";
  if (!report.missing.empty()) out << "; missing labels: " << join(report.missing);
  if (!report.extra.empty()) out << "; extra labels: " << join(report.extra);
  return out.str();
}

std::vector<std::uint8_t> render_label_preview(const nifti::NiftiLabelVolume& volume) {
  cv::Mat img(volume.height, volume.width, CV_8UC3, cv::Scalar(0, 0, 0));
  for (int y = 0; y < volume.height; ++y) {
    auto* row = img.ptr<cv::Vec3b>(y);
    for (int x = 0; x < volume.width; ++x) {
      const cv::Scalar c = detail::label_color(volume.at_image(x, y));
      row[x] = cv::Vec3b(static_cast<std::uint8_t>(c[0]), static_cast<std::uint8_t>(c[1]), static_cast<std::uint8_t>(c[2]));
    }
  }
  return detail::encode_png(img);
}

}  // namespace cellshape::labels
