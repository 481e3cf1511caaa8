#include "helpers.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace simtrace::testing {
namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  path_ = fs::temp_directory_path() /
          ("simtrace-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return std::move(s).str();
}

Collection CollectionOf(const std::vector<NamedSource>& sources, const CollectionOptions& options) {
  std::vector<ZipEntry> entries;
  for (const auto& [name, text] : sources) entries.push_back({name, text});
  return BuildCollection(std::move(entries), options);
}

double PairSimilarity(const NamedSource& left, const NamedSource& right, CollectionOptions options) {
  if (options.threads == 0) options.threads = 1;
  const Report report = Analyze(CollectionOf({left, right}, options), options);
  return report.pairs.empty() ? 0.0 : report.pairs.front().similarity;
}

std::string JsonWithoutCreatedAt(const std::string& json) {
  static const std::regex created(R"re(\n  "createdAt": "[^"]*")re");
  return std::regex_replace(json, created, "\n  \"createdAt\": \"\"", std::regex_constants::format_first_only);
}

}  // namespace simtrace::testing
