#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "simtrace/compare.hpp"
#include "simtrace/source_file.hpp"

namespace simtrace {

inline constexpr std::size_t kDefaultBinCount = 20;
inline constexpr double kFallbackThreshold = 0.75;
inline constexpr double kMinThreshold = 0.25;
inline constexpr double kMaxThreshold = 0.95;
// Minimum distance, in bins, between the two modes of the histogram.
inline constexpr std::size_t kMinModeSeparation = 3;

struct NearestNeighbour {
  FileId file = 0;
  std::optional<FileId> neighbour;
  double similarity = 0.0;

  friend bool operator==(const NearestNeighbour&, const NearestNeighbour&) = default;
};

// Highest-similarity partner per file; ties go to the lowest neighbour id.
std::vector<NearestNeighbour> NearestNeighbours(std::span<const PairAnalysis> pairs,
                                                std::size_t file_count);

struct SimilarityHistogram {
  std::size_t bin_count = kDefaultBinCount;
  std::vector<std::size_t> bins;
  // Files without any pair; they are counted in bin 0 as well.
  std::size_t isolated = 0;

  double bin_width() const { return 1.0 / static_cast<double>(bin_count); }
  std::size_t total() const;

  static SimilarityHistogram FromSimilarities(std::span<const double> values,
                                              std::size_t bin_count = kDefaultBinCount);
  static SimilarityHistogram FromNeighbours(std::span<const NearestNeighbour> nn,
                                            std::size_t bin_count = kDefaultBinCount);
};

// Valley between the two dominant modes of the 3-bin smoothed histogram,
// clamped to [kMinThreshold, kMaxThreshold]; kFallbackThreshold when the
// histogram is not bimodal or holds fewer than two files.
double InferThreshold(const SimilarityHistogram& histogram);

struct TimelineEntry {
  FileId file = 0;
  Timestamp timestamp;

  friend bool operator==(const TimelineEntry&, const TimelineEntry&) = default;
};

struct Timeline {
  std::vector<TimelineEntry> dated;  // ascending, ties by file id
  std::vector<FileId> undated;       // ascending id
  std::optional<FileId> origin;      // earliest dated member
};

struct Cluster {
  std::size_t id = 0;
  std::vector<FileId> files;                       // ascending
  std::vector<std::pair<FileId, FileId>> edges;    // qualifying pairs inside
  Timeline timeline;
};

// Connected components of {pairs with similarity >= threshold}, singletons
// excluded. Ordered by size descending, then smallest member ascending; ids
// follow that order. Timelines are filled when `files` is given.
std::vector<Cluster> ClusterPairs(std::span<const PairAnalysis> pairs,
                                  double threshold,
                                  std::span<const SourceFile> files = {});

Timeline ClusterTimeline(std::span<const FileId> members,
                         std::span<const SourceFile> files);

struct GraphNode {
  FileId file = 0;
  std::string display_name;
  std::optional<std::string> label;
};

struct PlagiarismGraph {
  std::vector<GraphNode> nodes;
  std::vector<std::pair<FileId, FileId>> edges;
  std::vector<Cluster> clusters;
  bool include_singletons = false;
};

std::string Pseudonym(FileId id);         // "File <id+1>"
std::string AuthorPseudonym(FileId id);   // "Student <id+1>"

PlagiarismGraph BuildGraph(std::span<const SourceFile> files,
                           std::span<const PairAnalysis> pairs, double threshold,
                           bool include_singletons, bool anonymize = false);

enum class SuspicionBand { kGreen, kOrange, kRed };

SuspicionBand BandFor(double similarity) noexcept;
const char* ToString(SuspicionBand band) noexcept;

struct OverviewStats {
  std::size_t file_count = 0;
  std::size_t total_lines = 0;
  double highest_similarity = 0.0;
  double average_similarity = 0.0;
  SuspicionBand highest_band = SuspicionBand::kGreen;
  SuspicionBand average_band = SuspicionBand::kGreen;
  SimilarityHistogram histogram;
};

OverviewStats ComputeOverview(std::span<const SourceFile> files,
                              std::span<const PairAnalysis> pairs);

}  // namespace simtrace
