#pragma once

#include <filesystem>
#include <istream>
#include <memory>

namespace wikiqual {

/// Opens a dump for reading, picking a decompression adapter by extension:
/// .gz (zlib) and .bz2 (bzip2 subprocess); anything else is read as-is.
/// Throws IoError when the file is missing or the adapter cannot start.
std::unique_ptr<std::istream> open_input(const std::filesystem::path& path);

}  // namespace wikiqual
