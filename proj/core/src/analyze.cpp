#include "simtrace/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>

#include "simtrace/union_find.hpp"

namespace simtrace {

std::vector<NearestNeighbour> NearestNeighbours(std::span<const PairAnalysis> pairs,
                                                std::size_t file_count) {
  std::vector<NearestNeighbour> nn(file_count);
  for (std::size_t i = 0; i < file_count; ++i) nn[i].file = i;

  auto offer = [&](FileId file, FileId other, double similarity) {
    if (file >= nn.size()) return;
    auto& cur = nn[file];
    if (!cur.neighbour || similarity > cur.similarity ||
        (similarity == cur.similarity && other < *cur.neighbour)) {
      cur.neighbour = other;
      cur.similarity = similarity;
    }
  };
  for (const auto& p : pairs) {
    offer(p.left, p.right, p.similarity);
    offer(p.right, p.left, p.similarity);
  }
  return nn;
}

std::size_t SimilarityHistogram::total() const {
  return std::accumulate(bins.begin(), bins.end(), std::size_t{0});
}

SimilarityHistogram SimilarityHistogram::FromSimilarities(std::span<const double> values,
                                                          std::size_t bin_count) {
  SimilarityHistogram h;
  h.bin_count = std::max<std::size_t>(bin_count, 1);
  h.bins.assign(h.bin_count, 0);
  for (double s : values) {
    s = std::clamp(s, 0.0, 1.0);
    auto bin = static_cast<std::size_t>(std::floor(s * static_cast<double>(h.bin_count)));
    ++h.bins[std::min(bin, h.bin_count - 1)];
  }
  return h;
}

SimilarityHistogram SimilarityHistogram::FromNeighbours(std::span<const NearestNeighbour> nn,
                                                        std::size_t bin_count) {
  std::vector<double> values;
  values.reserve(nn.size());
  std::size_t isolated = 0;
  for (const auto& n : nn) {
    values.push_back(n.neighbour ? n.similarity : 0.0);
    if (!n.neighbour) ++isolated;
  }
  auto h = FromSimilarities(values, bin_count);
  h.isolated = isolated;
  return h;
}

double InferThreshold(const SimilarityHistogram& histogram) {
  const auto& bins = histogram.bins;
  const std::size_t n = bins.size();
  if (n == 0 || histogram.total() < 2) return kFallbackThreshold;

  std::vector<double> smooth(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = std::min(n - 1, i + 1);
    double sum = 0;
    for (std::size_t j = lo; j <= hi; ++j) sum += static_cast<double>(bins[j]);
    smooth[i] = sum / static_cast<double>(hi - lo + 1);
  }

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    if (smooth[i] <= 0) continue;
    if (i > 0 && smooth[i] < smooth[i - 1]) continue;
    if (i + 1 < n && smooth[i] < smooth[i + 1]) continue;
    peaks.push_back(i);
  }
  if (peaks.size() < 2) return kFallbackThreshold;

  // Highest peak first, ties to the lower bin.
  auto higher = [&](std::size_t a, std::size_t b) {
    return smooth[a] > smooth[b] || (smooth[a] == smooth[b] && a < b);
  };
  const std::size_t first = *std::min_element(peaks.begin(), peaks.end(), higher);
  std::optional<std::size_t> second;
  for (std::size_t p : peaks) {
    const std::size_t gap = p > first ? p - first : first - p;
    if (gap < kMinModeSeparation) continue;
    if (!second || higher(p, *second)) second = p;
  }
  if (!second) return kFallbackThreshold;

  const std::size_t lo = std::min(first, *second);
  const std::size_t hi = std::max(first, *second);
  std::size_t min_count = bins[lo + 1];
  for (std::size_t i = lo + 1; i < hi; ++i) min_count = std::min(min_count, bins[i]);
  std::vector<std::size_t> valley;
  for (std::size_t i = lo + 1; i < hi; ++i) {
    if (bins[i] == min_count) valley.push_back(i);
  }
  // A flat valley resolves to its middle bin.
  const std::size_t bin = valley[(valley.size() - 1) / 2];
  const double centre = (static_cast<double>(bin) + 0.5) / static_cast<double>(n);
  return std::clamp(centre, kMinThreshold, kMaxThreshold);
}

Timeline ClusterTimeline(std::span<const FileId> members, std::span<const SourceFile> files) {
  std::map<FileId, const SourceFile*> by_id;
  for (const auto& f : files) by_id.emplace(f.id, &f);

  Timeline t;
  for (FileId id : members) {
    auto it = by_id.find(id);
    if (it != by_id.end() && it->second->timestamp) {
      t.dated.push_back({id, *it->second->timestamp});
    } else {
      t.undated.push_back(id);
    }
  }
  std::sort(t.dated.begin(), t.dated.end(), [](const auto& a, const auto& b) {
    return std::tie(a.timestamp, a.file) < std::tie(b.timestamp, b.file);
  });
  std::sort(t.undated.begin(), t.undated.end());
  if (!t.dated.empty()) t.origin = t.dated.front().file;
  return t;
}

std::vector<Cluster> ClusterPairs(std::span<const PairAnalysis> pairs, double threshold,
                                  std::span<const SourceFile> files) {
  std::size_t n = files.size();
  for (const auto& p : pairs) n = std::max(n, std::max(p.left, p.right) + 1);

  UnionFind sets(n);
  for (const auto& p : pairs) {
    if (p.similarity >= threshold) sets.Unite(p.left, p.right);
  }

  std::map<std::size_t, Cluster> by_root;
  for (FileId id = 0; id < n; ++id) {
    if (sets.SizeOf(id) >= 2) by_root[sets.Find(id)].files.push_back(id);
  }
  for (const auto& p : pairs) {
    if (p.similarity >= threshold) by_root[sets.Find(p.left)].edges.emplace_back(p.left, p.right);
  }

  std::vector<Cluster> clusters;
  clusters.reserve(by_root.size());
  for (auto& [root, c] : by_root) {
    std::sort(c.edges.begin(), c.edges.end());
    clusters.push_back(std::move(c));
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.files.size() != b.files.size()) return a.files.size() > b.files.size();
    return a.files.front() < b.files.front();
  });
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    clusters[i].id = i;
    if (!files.empty()) clusters[i].timeline = ClusterTimeline(clusters[i].files, files);
  }
  return clusters;
}

std::string Pseudonym(FileId id) { return "File " + std::to_string(id + 1); }
std::string AuthorPseudonym(FileId id) { return "Student " + std::to_string(id + 1); }

PlagiarismGraph BuildGraph(std::span<const SourceFile> files, std::span<const PairAnalysis> pairs,
                           double threshold, bool include_singletons, bool anonymize) {
  PlagiarismGraph g;
  g.include_singletons = include_singletons;
  g.clusters = ClusterPairs(pairs, threshold, files);

  std::vector<bool> incident(files.size(), false);
  for (const auto& p : pairs) {
    if (p.similarity < threshold) continue;
    g.edges.emplace_back(p.left, p.right);
    if (p.left < incident.size()) incident[p.left] = true;
    if (p.right < incident.size()) incident[p.right] = true;
  }
  std::sort(g.edges.begin(), g.edges.end());

  for (const auto& f : files) {
    if (!include_singletons && !(f.id < incident.size() && incident[f.id])) continue;
    g.nodes.push_back({f.id, anonymize ? Pseudonym(f.id) : f.path, f.label});
  }
  return g;
}

SuspicionBand BandFor(double similarity) noexcept {
  if (similarity < kOrangeBandStart) return SuspicionBand::kGreen;
  if (similarity < kRedBandStart) return SuspicionBand::kOrange;
  return SuspicionBand::kRed;
}

const char* ToString(SuspicionBand band) noexcept {
  switch (band) {
    case SuspicionBand::kGreen: return "green";
    case SuspicionBand::kOrange: return "orange";
    case SuspicionBand::kRed: return "red";
  }
  return "green";
}

OverviewStats ComputeOverview(std::span<const SourceFile> files,
                              std::span<const PairAnalysis> pairs) {
  OverviewStats s;
  s.file_count = files.size();
  for (const auto& f : files) s.total_lines += f.line_count;
  double sum = 0;
  for (const auto& p : pairs) {
    s.highest_similarity = std::max(s.highest_similarity, p.similarity);
    sum += p.similarity;
  }
  s.average_similarity = pairs.empty() ? 0.0 : sum / static_cast<double>(pairs.size());
  s.highest_band = BandFor(s.highest_similarity);
  s.average_band = BandFor(s.average_similarity);
  s.histogram = SimilarityHistogram::FromNeighbours(NearestNeighbours(pairs, files.size()));
  return s;
}

}  // namespace simtrace
