#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "simtrace/analyze.hpp"
#include "simtrace/compare.hpp"
#include "simtrace/ingest.hpp"
#include "simtrace/options.hpp"

namespace simtrace {

// Bumped on any change to the report.json layout.
inline constexpr int kReportFormatVersion = 1;

struct Report {
  int format_version = kReportFormatVersion;
  CollectionOptions options;  // language resolved
  std::map<std::string, std::string> grammar_versions;
  Timestamp created_at{};
  std::vector<SourceFile> files;
  std::vector<std::size_t> fingerprint_counts;  // by file id
  std::vector<PairAnalysis> pairs;  // similarity > 0, sorted by (left, right)
  double threshold = kFallbackThreshold;
  bool threshold_inferred = true;
  std::vector<NearestNeighbour> nearest;
  SimilarityHistogram histogram;
  OverviewStats overview;
  std::vector<Cluster> clusters;
  std::vector<std::string> warnings;

  // Pairs ranked by similarity descending, ties by (left, right).
  std::vector<const PairAnalysis*> RankedPairs() const;
};

// Runs tokenize -> fingerprint -> compare -> analyze over a loaded
// collection. `created_at` is set to the current time.
Report Analyze(Collection collection, const CollectionOptions& options);

// LoadCollection followed by Analyze.
Report AnalyzePath(const std::filesystem::path& source,
                   const CollectionOptions& options);

}  // namespace simtrace
