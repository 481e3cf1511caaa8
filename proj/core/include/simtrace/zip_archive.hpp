#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace simtrace {

struct ZipLimits {
  std::uint64_t max_entry_bytes = 10ull << 20;
  std::uint64_t max_total_bytes = 500ull << 20;
};

struct ZipEntry {
  std::string name;
  std::string data;
};

// Minimal ZIP reader (stored and deflate entries) over the central
// directory. Directory entries are skipped. CRCs are verified.
//
// Throws Error(kArchiveFormat) on malformed archives, unsupported
// compression or encryption, and Error(kArchiveLimit) when an entry or the
// archive total decompresses past `limits`.
std::vector<ZipEntry> ReadZip(std::span<const std::byte> archive,
                              const ZipLimits& limits = {});

std::vector<ZipEntry> ReadZipFile(const std::filesystem::path& path,
                                  const ZipLimits& limits = {});

// Cheap signature check ("PK\x03\x04" or an empty archive's "PK\x05\x06").
bool LooksLikeZip(const std::filesystem::path& path);

}  // namespace simtrace
