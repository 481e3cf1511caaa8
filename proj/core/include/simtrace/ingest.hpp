#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "simtrace/options.hpp"
#include "simtrace/source_file.hpp"
#include "simtrace/zip_archive.hpp"

namespace simtrace {

inline constexpr std::string_view kMetadataFileName = "info.csv";

struct Collection {
  std::string language;
  std::vector<SourceFile> files;
  std::vector<std::string> warnings;
};

struct MetadataResult {
  std::vector<SourceFile> files;
  std::vector<std::string> warnings;
};

// Loads a directory tree or a ZIP archive. Files are filtered to the
// resolved language, sorted by path and numbered 0..n-1; `info.csv` at the
// root is merged as metadata.
//
// Throws Error with kIo, kEmptyCollection, kInsufficientFiles,
// kUnknownLanguage, kAmbiguousLanguage, kMetadataFormat or an archive code.
Collection LoadCollection(const std::filesystem::path& source,
                          const CollectionOptions& options,
                          const ZipLimits& limits = {});

// Same as LoadCollection over already-read (path, content) entries. Paths are
// relative and '/'-separated.
Collection BuildCollection(std::vector<ZipEntry> entries,
                           const CollectionOptions& options);

// Matches rows to files on the `filename` column and fills author
// (`full_name`), label and timestamp (`created_at`). Duplicate rows for one
// file: the last row wins.
MetadataResult ParseMetadata(std::string_view csv_text,
                             std::vector<SourceFile> files);

}  // namespace simtrace
