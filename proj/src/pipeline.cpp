#include "cellshape/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <ostream>
#include <sstream>
#include <thread>

#include "cellshape/csv.hpp"
#include "cellshape/error.hpp"
#include "cellshape/files.hpp"
#include "cellshape/geometry.hpp"
#include "cellshape/labels.hpp"
#include "cellshape/polygon.hpp"
#include "cellshape/raster.hpp"
#include "cellshape/signatures.hpp"

namespace cellshape::pipeline {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct ImageOutcome {
  ImageResult result;
  std::vector<std::uint8_t> feature_map;
  std::string error;
};

int majority_label(const std::vector<Point>& pixels, const nifti::NiftiLabelVolume& labels) {
  std::map<int, std::size_t> votes;
  for (const auto& p : pixels) ++votes[labels.at_image(p.x, p.y)];
  int best = 0;
  std::size_t best_count = 0;
  for (const auto& [label, count] : votes) {
    if (count > best_count) {  // map order resolves ties to the smaller label
      best = label;
      best_count = count;
    }
  }
  return best;
}

void append_poly(std::vector<std::pair<std::string, double>>& out, std::string_view prefix, const poly::PolygonMetrics* m) {
  const std::string p(prefix);
  out.emplace_back(p + "_n_vertices", m ? static_cast<double>(m->n_vertices) : kNaN);
  out.emplace_back(p + "_perimeter_ratio", m ? m->perimeter_ratio : kNaN);
  out.emplace_back(p + "_area_ratio", m ? m->area_ratio : kNaN);
  out.emplace_back(p + "_compression", m ? m->compression : kNaN);
}

std::vector<std::pair<std::string, double>> describe_region(const Contour& outer, std::span<const Contour> holes,
                                                             std::span<const Point> pixels, const FeatureParams& params) {
  const auto g = geom::compute_geometric_features(outer, holes, pixels, params.n_samples);
  std::vector<std::pair<std::string, double>> f;
  f.emplace_back("abe", g.abe);
  f.emplace_back("mbr_width", g.mbr.width);
  f.emplace_back("mbr_angle", g.mbr.angle_deg);
  f.emplace_back("mbr_height", g.mbr.height);
  f.emplace_back("area", g.area);
  f.emplace_back("perimeter", g.perimeter);
  f.emplace_back("centroid_x", g.centroid.x);
  f.emplace_back("centroid_y", g.centroid.y);
  f.emplace_back("circularity", g.circularity);
  f.emplace_back("eccentricity", g.eccentricity);
  f.emplace_back("solidity", g.solidity);
  f.emplace_back("convexity", g.convexity);
  f.emplace_back("rectangularity", g.rectangularity);
  f.emplace_back("elongation", g.elongation);
  f.emplace_back("euler_number", g.euler_number);
  f.emplace_back("hole_area_ratio", g.hole_area_ratio);

  for (const auto& sig : signature::compute_signatures(outer, params.n_samples)) {
    const auto s = signature::summarize_signature(sig);
    const std::string name(signature::kind_name(sig.kind));
    f.emplace_back(name + "_mean", s.mean);
    f.emplace_back(name + "_std", s.std);
    f.emplace_back(name + "_min", s.min);
    f.emplace_back(name + "_max", s.max);
  }

  const auto dp = poly::polygon_metrics(poly::douglas_peucker(outer, params.dp_epsilon), outer);
  append_poly(f, "dp", &dp);
  try {
    const auto mpp = poly::polygon_metrics(poly::min_perimeter_polygon(outer, params.mpp_cell), outer);
    append_poly(f, "mpp", &mpp);
  } catch (const DegenerateError&) {
    append_poly(f, "mpp", nullptr);
  }
  return f;
}

ImageResult extract_impl(const BinaryMask& raw, const FeatureParams& params, const nifti::NiftiLabelVolume* labels,
                         std::optional<Contour>* largest) {
  const BinaryMask pre = raster::preprocess(raw, params.sigma, params.close_radius);
  const LabeledMask labeled = raster::label_components(pre);
  if (labels != nullptr && (labels->width != raw.width() || labels->height != raw.height())) {
    throw FormatError("label volume is " + std::to_string(labels->width) + "x" + std::to_string(labels->height) +
                      " but the mask is " + std::to_string(raw.width()) + "x" + std::to_string(raw.height()));
  }
  const auto contours = raster::trace_contours(labeled);

  const auto n = static_cast<std::size_t>(labeled.num_regions);
  std::vector<std::vector<Point>> pixels(n + 1);
  for (int y = 0; y < labeled.height; ++y) {
    for (int x = 0; x < labeled.width; ++x) {
      const auto l = labeled.at(x, y);
      if (l != 0) pixels[static_cast<std::size_t>(l)].push_back({x, y});
    }
  }
  std::vector<const Contour*> outer(n + 1, nullptr);
  std::vector<std::vector<Contour>> holes(n + 1);
  for (const auto& c : contours) {
    const auto l = static_cast<std::size_t>(c.region_label);
    if (c.is_hole) {
      holes[l].push_back(c);
    } else {
      outer[l] = &c;
    }
  }

  ImageResult result;
  const std::string name = raw.source_name();
  if (largest != nullptr && n > 0) {
    const auto big = static_cast<std::size_t>(raster::largest_region(labeled));
    if (outer[big] != nullptr) *largest = *outer[big];
  }
  int number = 0;
  for (std::size_t l = 1; l <= n; ++l) {
    if (outer[l] == nullptr) {
      result.notices.push_back(name + ": region " + std::to_string(l) + " skipped (fewer than 4 boundary points)");
      continue;
    }
    std::optional<int> label;
    if (labels != nullptr) {
      label = majority_label(pixels[l], *labels);
      if (*label == 0) continue;  // background class
    }
    try {
      FeatureRecord rec{name, number + 1, label, describe_region(*outer[l], holes[l], pixels[l], params)};
      result.records.push_back(std::move(rec));
      ++number;
    } catch (const DegenerateError& e) {
      result.notices.push_back(name + ": region " + std::to_string(l) + " skipped (" + e.what() + ")");
    }
  }
  return result;
}

ImageOutcome process_file(const std::filesystem::path& path, const RunConfig& config) {
  ImageOutcome out;
  try {
    const BinaryMask raw = raster::decode_mask(path, config.params.threshold);
    std::optional<nifti::NiftiLabelVolume> labels;
    if (config.mode == Mode::multi) {
      const auto nii = *config.nifti_folder / (path.stem().string() + ".nii");
      if (!std::filesystem::exists(nii)) throw Error("no label volume " + nii.filename().string() + " for this mask");
      labels = nifti::read_nifti(nii);
    }
    std::optional<Contour> largest;
    out.result = extract_impl(raw, config.params, labels ? &*labels : nullptr, &largest);
    if (config.output) {
      if (largest) {
        const auto roi = featuremap::describe_roi(*largest, config.params.n_samples, config.params.dp_epsilon,
                                                  config.params.mpp_cell);
        out.feature_map = featuremap::render_feature_map(raw, roi, config.feature_map);
      } else {
        out.result.notices.push_back(raw.source_name() + ": no ROI, feature map skipped");
      }
    }
  } catch (const std::exception& e) {
    out.error = path.filename().string() + ": " + e.what();
  }
  return out;
}

}  // namespace

void validate(const RunConfig& config) {
  std::error_code ec;
  if (config.input.empty() || !std::filesystem::is_directory(config.input, ec)) {
    throw UsageError("input folder does not exist: " + config.input.string());
  }
  if (config.csv_file.empty()) throw UsageError("--csv_file is required");
  if (config.mode == Mode::multi) {
    if (!config.nifti_folder) throw UsageError("multi-class mode requires --nifti_folder");
    if (!std::filesystem::is_directory(*config.nifti_folder, ec)) {
      throw UsageError("NIfTI folder does not exist: " + config.nifti_folder->string());
    }
  }
  const auto& p = config.params;
  if (!(p.sigma > 0.0) || p.close_radius < 1 || p.n_samples < 8 || p.n_samples % 2 != 0 || !(p.dp_epsilon >= 0.0) ||
      p.mpp_cell < 1) {
    throw UsageError("invalid feature parameters (sigma > 0, radius >= 1, even samples >= 8, epsilon >= 0, cell >= 1)");
  }
  featuremap::validate(config.feature_map);
}

const std::vector<std::string>& feature_columns() {
  static const std::vector<std::string> columns = [] {
    // Derive the roster from a unit square so names cannot drift from describe_region.
    Contour square{{{0, 0}, {8, 0}, {8, 8}, {0, 8}}, 1, false};
    std::vector<Point> pixels;
    for (int y = 0; y <= 8; ++y) {
      for (int x = 0; x <= 8; ++x) pixels.push_back({x, y});
    }
    std::vector<std::string> names;
    for (const auto& [name, _] : describe_region(square, {}, pixels, FeatureParams{})) names.push_back(name);
    return names;
  }();
  return columns;
}

ImageResult extract_image(const BinaryMask& raw, const FeatureParams& params, const nifti::NiftiLabelVolume* labels) {
  return extract_impl(raw, params, labels, nullptr);
}

std::string format_csv(const std::vector<FeatureRecord>& records, Mode mode) {
  std::ostringstream out;
  out << "image_name,contour_number";
  if (mode == Mode::multi) out << ",label";
  for (const auto& c : feature_columns()) out << ',' << c;
  out << '\n';
  for (const auto& r : records) {
    out << csv::escape(r.image_name) << ',' << r.contour_number;
    if (mode == Mode::multi) out << ',' << (r.label ? std::to_string(*r.label) : std::string{});
    for (const auto& [_, value] : r.features) out << ',' << csv::format_number(value);
    out << '\n';
  }
  return out.str();
}

int run_extract(const RunConfig& config, std::ostream& diag) {
  std::vector<std::filesystem::path> inputs;
  try {
    validate(config);
    inputs = files::list_mask_files(config.input);
  } catch (const Error& e) {
    diag << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (inputs.empty()) {
    diag << "usage error: no PNG, JPEG or TIFF images in " << config.input.string() << '\n';
    return kExitUsage;
  }

  std::vector<ImageOutcome> outcomes(inputs.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < inputs.size(); i = cursor++) outcomes[i] = process_file(inputs[i], config);
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned jobs = std::min<unsigned>(config.jobs == 0 ? hw : config.jobs, static_cast<unsigned>(inputs.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  std::vector<FeatureRecord> records;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto& o = outcomes[i];
    for (const auto& note : o.result.notices) diag << "note: " << note << '\n';
    if (!o.error.empty()) {
      diag << "error: " << o.error << '\n';
      ++failures;
      continue;
    }
    for (auto& r : o.result.records) records.push_back(std::move(r));
    if (config.output && !o.feature_map.empty()) {
      try {
        files::write_bytes(*config.output / (inputs[i].stem().string() + "_featuremap.png"), o.feature_map);
      } catch (const std::exception& e) {
        diag << "error: " << inputs[i].filename().string() << ": " << e.what() << '\n';
        ++failures;
      }
    }
  }
  try {
    files::write_text(config.csv_file, format_csv(records, config.mode));
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kExitPartialFailure;
  }
  return failures == 0 ? kExitOk : kExitPartialFailure;
}

int run_create_label(const CreateLabelConfig& config, std::ostream& diag) {
  try {
    if (files::list_mask_files(config.folder_path).empty()) {
      throw UsageError("no PNG, JPEG or TIFF images in " + config.folder_path.string());
    }
    if (config.output_csv_folder.empty() || config.output_image_folder.empty()) {
      throw UsageError("output folders are required");
    }
  } catch (const Error& e) {
    diag << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto report = labels::create_label_template(config.folder_path, config.output_csv_folder,
                                                    config.output_image_folder, diag, config.threshold);
  return report.failed == 0 ? kExitOk : kExitPartialFailure;
}

int run_nifti(const NiftiConfig& config, std::ostream& report, std::ostream& diag) {
  std::vector<std::filesystem::path> masks;
  try {
    masks = files::list_mask_files(config.folder_path);
    if (masks.empty()) throw UsageError("no PNG, JPEG or TIFF images in " + config.folder_path.string());
    std::error_code ec;
    if (!std::filesystem::is_directory(config.input_csv_folder, ec)) {
      throw UsageError("CSV folder does not exist: " + config.input_csv_folder.string());
    }
    if (config.nifti_save_dir.empty() || config.label_save_dir.empty()) throw UsageError("output folders are required");
  } catch (const Error& e) {
    diag << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::size_t problems = 0;
  for (const auto& path : masks) {
    const std::string stem = path.stem().string();
    try {
      const auto csv_path = config.input_csv_folder / (stem + ".csv");
      if (!std::filesystem::exists(csv_path)) throw Error("missing label CSV for '" + stem + "'");
      const BinaryMask mask = raster::decode_mask(path, config.threshold);
      const auto table = labels::read_label_table(csv_path);
      const int regions = raster::label_components(mask).num_regions;
      std::set<int> unknown;
      for (const auto& row : table) {
        if (row.cell_id > regions) unknown.insert(row.cell_id);
      }
      if (!unknown.empty()) {
        std::string ids;
        for (const int id : unknown) ids += (ids.empty() ? "" : ", ") + std::to_string(id);
        throw MissingLabelError("cell_id " + ids + " not present in the mask");
      }
      const auto volume = labels::build_label_volume(mask, table);
      std::filesystem::create_directories(config.nifti_save_dir);
      const auto nii = config.nifti_save_dir / (stem + ".nii");
      nifti::write_nifti(volume, nii);
      files::write_bytes(config.label_save_dir / (stem + "_labels.png"), labels::render_label_preview(volume));
      const auto written = nifti::read_nifti(nii);
      if (written.voxels != volume.voxels) throw Error("written NIfTI volume does not read back identically");
      const auto check = labels::verify_labels(written, table);
      report << path.filename().string() << ": " << labels::describe(check) << '\n';
      if (!check.consistent) ++problems;
    } catch (const std::exception& e) {
      diag << "error: " << path.filename().string() << ": " << e.what() << '\n';
      ++problems;
    }
  }
  return problems == 0 ? kExitOk : kExitPartialFailure;
}

}  // namespace cellshape::pipeline
