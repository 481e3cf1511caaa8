#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "simtrace/ingest.hpp"
#include "simtrace/report.hpp"

namespace simtrace::testing {

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void WriteText(const std::filesystem::path& path, const std::string& text);
std::string ReadText(const std::filesystem::path& path);

using NamedSource = std::pair<std::string, std::string>;

Collection CollectionOf(const std::vector<NamedSource>& sources,
                        const CollectionOptions& options = {});

// Similarity of the only pair of a two-file collection, 0 when absent.
double PairSimilarity(const NamedSource& left, const NamedSource& right,
                      CollectionOptions options = {});

// report.json with the createdAt line blanked.
std::string JsonWithoutCreatedAt(const std::string& json);

}  // namespace simtrace::testing
