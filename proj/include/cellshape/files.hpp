#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cellshape::files {

/// Regular files with a .png, .jpg, .jpeg, .tif or .tiff extension (any
/// case), sorted lexicographically by filename. Throws UsageError when the
/// folder does not exist.
std::vector<std::filesystem::path> list_mask_files(const std::filesystem::path& folder);

/// Writes bytes to path, creating parent directories.
void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace cellshape::files
