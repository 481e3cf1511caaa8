#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "simtrace/report.hpp"

namespace simtrace {

struct JsonOptions {
  bool include_fragments = false;
  bool anonymize = false;
  int indent = 2;
};

// report.json. Keys are emitted in a fixed order, so identical reports give
// identical bytes. Fragments (and per-pair diff hunks) only when asked for.
std::string ToJson(const Report& report, const JsonOptions& options = {});

struct TerminalOptions {
  bool anonymize = false;
  std::size_t max_rows = 20;
};

std::string FormatTerminal(const Report& report,
                           const TerminalOptions& options = {});

// Fixed-point with six decimals; exact binary ties round to even.
std::string FormatSimilarity(double value);

std::string FilesCsv(const Report& report, bool anonymize = false);
std::string PairsCsv(const Report& report);
std::string ClustersCsv(const Report& report);

// Writes files.csv, pairs.csv and clusters.csv into `directory`, creating it
// if needed.
void WriteCsv(const Report& report, const std::filesystem::path& directory,
              bool anonymize = false);

struct PairRecord {
  FileId left = 0;
  FileId right = 0;
  double similarity = 0.0;
  std::size_t total_overlap = 0;
  std::size_t longest_fragment = 0;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

// Reads a pairs.csv back. Throws Error(kMetadataFormat) on a bad header or
// an unparsable row.
std::vector<PairRecord> ParsePairsCsv(std::string_view text);

}  // namespace simtrace
