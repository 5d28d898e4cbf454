// Batch front-end: extract, create-label, nifti.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cellshape/kernels.hpp"
#include "cellshape/pipeline.hpp"

namespace {

using cellshape::pipeline::kExitUsage;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shape feature extraction for binary mask folders"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cellshape 0.1.0");

  cellshape::pipeline::RunConfig run;
  std::string label = "s";
  std::string nifti_folder;
  std::string output;
  unsigned threshold = 127;
  auto* extract = app.add_subcommand("extract", "Extract per-ROI shape features to CSV and render feature maps");
  extract->add_option("--input", run.input, "Folder with binary masks")->required();
  extract->add_option("--csv_file", run.csv_file, "CSV file to write")->required();
  extract->add_option("--output", output, "Folder for <stem>_featuremap.png files");
  extract->add_option("--label", label, "'s' single-class or 'm' multi-class")
      ->check(CLI::IsMember({"s", "m", "'s'", "'m'"}))
      ->capture_default_str();
  extract->add_option("--nifti_folder", nifti_folder, "Folder with <stem>.nii label volumes (multi-class)");
  extract->add_option("--sigma", run.params.sigma, "Gaussian blur sigma (px)")->capture_default_str();
  extract->add_option("--close_radius", run.params.close_radius, "Closing structuring element radius (px)")
      ->capture_default_str();
  extract->add_option("--samples", run.params.n_samples, "Boundary samples per signature")->capture_default_str();
  extract->add_option("--dp_epsilon", run.params.dp_epsilon, "Douglas-Peucker tolerance (px)")->capture_default_str();
  extract->add_option("--mpp_cell", run.params.mpp_cell, "MPP grid cell size (px)")->capture_default_str();
  extract->add_option("--threshold", threshold, "Foreground iff luma > threshold")
      ->check(CLI::Range(0u, 255u))
      ->capture_default_str();
  extract->add_option("--jobs", run.jobs, "Worker threads, 0 = all cores")->capture_default_str();

  cellshape::pipeline::CreateLabelConfig create;
  auto* create_label = app.add_subcommand("create-label", "Write label templates and annotated overlays");
  create_label->add_option("--folder_path", create.folder_path, "Folder with binary masks")->required();
  create_label->add_option("--output_csv_folder", create.output_csv_folder, "Folder for <stem>.csv templates")
      ->required();
  create_label->add_option("--output_image_folder", create.output_image_folder, "Folder for <stem>_labeled.png")
      ->required();
  create_label->add_option("--threshold", threshold, "Foreground iff luma > threshold")->check(CLI::Range(0u, 255u));

  cellshape::pipeline::NiftiConfig nii;
  auto* nifti = app.add_subcommand("nifti", "Build NIfTI label volumes from annotated templates");
  nifti->add_option("--folder_path", nii.folder_path, "Folder with binary masks")->required();
  nifti->add_option("--input_csv_folder", nii.input_csv_folder, "Folder with annotated <stem>.csv files")->required();
  nifti->add_option("--nifti_save_dir", nii.nifti_save_dir, "Folder for <stem>.nii volumes")->required();
  nifti->add_option("--label_save_dir", nii.label_save_dir, "Folder for <stem>_labels.png previews")->required();
  nifti->add_option("--threshold", threshold, "Foreground iff luma > threshold")->check(CLI::Range(0u, 255u));

  app.add_flag_callback("--scalar", [] { cellshape::kernels::override_kernels(&cellshape::kernels::scalar_kernels()); },
                        "Use the scalar reference kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto thr = static_cast<std::uint8_t>(threshold);
  if (extract->parsed()) {
    run.mode = (label == "m" || label == "'m'") ? cellshape::pipeline::Mode::multi : cellshape::pipeline::Mode::single;
    if (!nifti_folder.empty()) run.nifti_folder = nifti_folder;
    if (!output.empty()) run.output = output;
    run.params.threshold = thr;
    return cellshape::pipeline::run_extract(run, std::cerr);
  }
  if (create_label->parsed()) {
    create.threshold = thr;
    return cellshape::pipeline::run_create_label(create, std::cerr);
  }
  nii.threshold = thr;
  return cellshape::pipeline::run_nifti(nii, std::cout, std::cerr);
}
