#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace simtrace::testing {

struct ZipInput {
  std::string name;
  std::string data;
  bool deflate = true;
};

// Builds a ZIP archive in memory (stored or deflated entries, no ZIP64).
std::vector<std::byte> WriteZip(const std::vector<ZipInput>& entries);

void WriteZipFile(const std::filesystem::path& path, const std::vector<ZipInput>& entries);

}  // namespace simtrace::testing
