#include <charconv>
#include <cstdio>
#include <fstream>

#include "simtrace/csv.hpp"
#include "simtrace/error.hpp"
#include "simtrace/report_io.hpp"

namespace simtrace {
namespace fs = std::filesystem;

std::string FormatSimilarity(double value) {
  // Rounds the exact binary value; true ties go to even.
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string FilesCsv(const Report& report, bool anonymize) {
  std::string out = csv::FormatRow(
      {"id", "path", "lineCount", "fingerprintCount", "label", "author", "createdAt"});
  for (const auto& f : report.files) {
    std::string author = f.author.value_or("");
    if (anonymize && f.author) author = AuthorPseudonym(f.id);
    out += csv::FormatRow({
        std::to_string(f.id),
        anonymize ? Pseudonym(f.id) : f.path,
        std::to_string(f.line_count),
        std::to_string(f.id < report.fingerprint_counts.size() ? report.fingerprint_counts[f.id] : 0),
        f.label.value_or(""),
        author,
        f.timestamp ? FormatTimestamp(*f.timestamp) : "",
    });
  }
  return out;
}

std::string PairsCsv(const Report& report) {
  std::string out =
      csv::FormatRow({"leftId", "rightId", "similarity", "totalOverlap", "longestFragment"});
  for (const auto& p : report.pairs) {
    out += csv::FormatRow({std::to_string(p.left), std::to_string(p.right),
                           FormatSimilarity(p.similarity), std::to_string(p.total_overlap),
                           std::to_string(p.longest_fragment)});
  }
  return out;
}

std::string ClustersCsv(const Report& report) {
  std::string out = csv::FormatRow({"clusterId", "fileId"});
  for (const auto& c : report.clusters) {
    for (FileId f : c.files) out += csv::FormatRow({std::to_string(c.id), std::to_string(f)});
  }
  return out;
}

namespace {

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
}

template <typename T>
T ParseNumber(const std::string& field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(ErrorCode::kMetadataFormat,
                "pairs.csv line " + std::to_string(line) + ": bad number '" + field + "'");
  }
  return value;
}

}  // namespace

void WriteCsv(const Report& report, const fs::path& directory, bool anonymize) {
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create '" + directory.string() + "': " + ec.message());
  WriteText(directory / "files.csv", FilesCsv(report, anonymize));
  WriteText(directory / "pairs.csv", PairsCsv(report));
  WriteText(directory / "clusters.csv", ClustersCsv(report));
}

std::vector<PairRecord> ParsePairsCsv(std::string_view text) {
  auto rows = csv::Parse(text);
  const csv::Row header{"leftId", "rightId", "similarity", "totalOverlap", "longestFragment"};
  if (rows.empty() || rows.front() != header) {
    throw Error(ErrorCode::kMetadataFormat, "pairs.csv: unexpected header");
  }
  std::vector<PairRecord> records;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      throw Error(ErrorCode::kMetadataFormat,
                  "pairs.csv line " + std::to_string(r + 1) + ": expected 5 fields");
    }
    records.push_back({ParseNumber<FileId>(row[0], r + 1), ParseNumber<FileId>(row[1], r + 1),
                       ParseNumber<double>(row[2], r + 1), ParseNumber<std::size_t>(row[3], r + 1),
                       ParseNumber<std::size_t>(row[4], r + 1)});
  }
  return records;
}

}  // namespace simtrace
