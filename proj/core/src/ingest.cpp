#include "simtrace/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>

#include "simtrace/csv.hpp"
#include "simtrace/error.hpp"
#include "simtrace/language.hpp"

namespace simtrace {
namespace fs = std::filesystem;
namespace {

// nullopt for entries that must not take part in the analysis: archive
// metadata folders, hidden files and paths escaping the root.
std::optional<std::string> NormalisePath(std::string_view name, std::vector<std::string>& warnings) {
  std::string path(name);
  std::replace(path.begin(), path.end(), '\\', '/');
  while (path.starts_with("./")) path.erase(0, 2);
  if (path.empty()) return std::nullopt;
  if (path.front() == '/' || (path.size() > 1 && path[1] == ':')) {
    warnings.push_back("skipped absolute archive path '" + path + "'");
    return std::nullopt;
  }
  std::size_t start = 0;
  while (start <= path.size()) {
    auto end = path.find('/', start);
    if (end == std::string::npos) end = path.size();
    std::string_view segment(path.data() + start, end - start);
    if (segment == "..") {
      warnings.push_back("skipped archive path escaping the root '" + path + "'");
      return std::nullopt;
    }
    if (segment == "__MACOSX" || segment.starts_with('.')) return std::nullopt;
    start = end + 1;
  }
  return path;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  return data;
}

std::vector<ZipEntry> ReadDirectory(const fs::path& root) {
  std::vector<ZipEntry> entries;
  std::error_code ec;
  fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot read directory '" + root.string() + "': " + ec.message());
  for (const auto& entry : it) {
    const auto name = entry.path().filename().string();
    if (name.starts_with('.')) {
      if (entry.is_directory()) it.disable_recursion_pending();
      continue;
    }
    if (!entry.is_regular_file()) continue;
    entries.push_back({fs::relative(entry.path(), root).generic_string(), ReadFile(entry.path())});
  }
  return entries;
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

Collection BuildCollection(std::vector<ZipEntry> entries, const CollectionOptions& options) {
  Collection out;
  std::optional<std::string> metadata;
  std::map<std::string, std::string> sources;  // sorted by path

  for (auto& entry : entries) {
    auto path = NormalisePath(entry.name, out.warnings);
    if (!path) continue;
    if (*path == kMetadataFileName) {
      metadata = std::move(entry.data);
      continue;
    }
    if (!sources.emplace(*path, std::move(entry.data)).second) {
      out.warnings.push_back("duplicate entry '" + *path + "', keeping the first");
    }
  }
  if (sources.empty()) {
    throw Error(ErrorCode::kEmptyCollection, "no source files found");
  }

  if (options.auto_language()) {
    std::vector<std::string> paths;
    paths.reserve(sources.size());
    for (const auto& [path, _] : sources) paths.push_back(path);
    out.language = DetectLanguage(paths);
  } else {
    out.language = options.language;
  }

  for (auto& [path, content] : sources) {
    auto lang = LanguageForPath(path);
    if (lang != out.language) {
      out.warnings.push_back("excluded '" + path + "': not a " + out.language + " file");
      continue;
    }
    SourceFile file;
    file.id = out.files.size();
    file.path = path;
    file.line_count = CountLines(content);
    file.content = std::move(content);
    file.language = out.language;
    out.files.push_back(std::move(file));
  }

  if (out.files.empty()) {
    throw Error(ErrorCode::kEmptyCollection, "no " + out.language + " source files found");
  }
  if (out.files.size() < 2) {
    throw Error(ErrorCode::kInsufficientFiles,
                "at least 2 files are needed for a pairwise analysis, found 1 ('" +
                    out.files.front().path + "')");
  }

  if (metadata) {
    auto merged = ParseMetadata(*metadata, std::move(out.files));
    out.files = std::move(merged.files);
    out.warnings.insert(out.warnings.end(), merged.warnings.begin(), merged.warnings.end());
  }
  return out;
}

Collection LoadCollection(const fs::path& source, const CollectionOptions& options,
                          const ZipLimits& limits) {
  options.Validate();
  std::error_code ec;
  auto status = fs::status(source, ec);
  if (ec || !fs::exists(status)) {
    throw Error(ErrorCode::kIo, "'" + source.string() + "' does not exist");
  }
  if (fs::is_directory(status)) return BuildCollection(ReadDirectory(source), options);
  if (!fs::is_regular_file(status) || !LooksLikeZip(source)) {
    throw Error(ErrorCode::kIo, "'" + source.string() + "' is neither a directory nor a ZIP archive");
  }
  return BuildCollection(ReadZipFile(source, limits), options);
}

MetadataResult ParseMetadata(std::string_view csv_text, std::vector<SourceFile> files) {
  MetadataResult out;
  auto rows = csv::Parse(csv_text);
  if (rows.empty()) {
    throw Error(ErrorCode::kMetadataFormat, "metadata CSV has no header row");
  }

  std::map<std::string, std::size_t> columns;
  for (std::size_t i = 0; i < rows.front().size(); ++i) {
    columns.emplace(Lower(Trim(rows.front()[i])), i);
  }
  auto column = [&](const char* name) -> std::optional<std::size_t> {
    auto it = columns.find(name);
    if (it == columns.end()) return std::nullopt;
    return it->second;
  };
  const auto filename_col = column("filename");
  if (!filename_col) {
    throw Error(ErrorCode::kMetadataFormat, "metadata CSV lacks a 'filename' column");
  }
  const auto author_col = column("full_name");
  const auto label_col = column("label");
  const auto created_col = column("created_at");

  std::map<std::string, std::size_t> by_path;  // path -> index into files
  for (std::size_t i = 0; i < files.size(); ++i) by_path.emplace(files[i].path, i);

  std::map<std::size_t, std::size_t> last_row;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    auto field = [&](std::optional<std::size_t> col) -> std::string {
      if (!col || *col >= row.size()) return {};
      return Trim(row[*col]);
    };
    auto name = field(filename_col);
    auto it = by_path.find(name);
    if (it == by_path.end()) {
      out.warnings.push_back("metadata row " + std::to_string(r + 1) + " refers to unknown file '" +
                             name + "'");
      continue;
    }
    if (!last_row.emplace(it->second, r).second) {
      out.warnings.push_back("duplicate metadata rows for '" + name + "', using row " +
                             std::to_string(r + 1));
      last_row[it->second] = r;
    }
  }

  for (auto [index, r] : last_row) {
    const auto& row = rows[r];
    auto field = [&](std::optional<std::size_t> col) -> std::optional<std::string> {
      if (!col || *col >= row.size()) return std::nullopt;
      auto value = Trim(row[*col]);
      if (value.empty()) return std::nullopt;
      return value;
    };
    auto& file = files[index];
    file.author = field(author_col);
    file.label = field(label_col);
    file.timestamp.reset();
    if (auto created = field(created_col)) {
      file.timestamp = ParseTimestamp(*created);
      if (!file.timestamp) {
        out.warnings.push_back("unparseable created_at '" + *created + "' for '" + file.path + "'");
      }
    }
  }
  out.files = std::move(files);
  return out;
}

}  // namespace simtrace
