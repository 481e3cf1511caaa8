#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "simtrace/analyze.hpp"

namespace simtrace {
namespace {

PairAnalysis P(FileId l, FileId r, double s) {
  PairAnalysis p;
  p.left = l;
  p.right = r;
  p.similarity = s;
  return p;
}

std::vector<SourceFile> Files(std::size_t n) {
  std::vector<SourceFile> files(n);
  for (std::size_t i = 0; i < n; ++i) {
    files[i].id = i;
    files[i].path = "sub" + std::to_string(i) + ".py";
    files[i].line_count = 10;
  }
  return files;
}

TEST(Nearest, Examples) {
  const std::vector<PairAnalysis> pairs = {P(0, 1, 0.9), P(1, 2, 0.5)};
  const auto nn = NearestNeighbours(pairs, 3);
  EXPECT_EQ(nn[0], (NearestNeighbour{0, 1, 0.9}));
  EXPECT_EQ(nn[1], (NearestNeighbour{1, 0, 0.9}));
  EXPECT_EQ(nn[2], (NearestNeighbour{2, 1, 0.5}));

  const auto lonely = NearestNeighbours({}, 2);
  EXPECT_FALSE(lonely[0].neighbour);
  EXPECT_EQ(lonely[1].similarity, 0.0);

  const std::vector<PairAnalysis> one = {P(0, 1, 0.42)};
  const auto sym = NearestNeighbours(one, 2);
  EXPECT_EQ(sym[0].similarity, 0.42);
  EXPECT_EQ(sym[1].similarity, 0.42);

  const std::vector<PairAnalysis> tie = {P(0, 2, 0.7), P(0, 1, 0.7)};
  EXPECT_EQ(NearestNeighbours(tie, 3)[0].neighbour, 1u);
}

TEST(Histogram, Binning) {
  const std::vector<double> values = {0.0, 0.049, 0.05, 0.999, 1.0};
  const auto h = SimilarityHistogram::FromSimilarities(values);
  EXPECT_EQ(h.bins.size(), 20u);
  EXPECT_EQ(h.bins[0], 2u);
  EXPECT_EQ(h.bins[1], 1u);
  EXPECT_EQ(h.bins[19], 2u);
  EXPECT_EQ(h.total(), 5u);
}

TEST(Threshold, SeparatesSeededBimodalSample) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> low(0.40, 0.08), high(0.95, 0.03);
  std::vector<double> lows, highs, all;
  for (int i = 0; i < 100; ++i) lows.push_back(std::clamp(low(rng), 0.0, 1.0));
  for (int i = 0; i < 30; ++i) highs.push_back(std::clamp(high(rng), 0.0, 1.0));
  all = lows;
  all.insert(all.end(), highs.begin(), highs.end());
  const double t = InferThreshold(SimilarityHistogram::FromSimilarities(all));
  EXPECT_GE(t, 0.55);
  EXPECT_LE(t, 0.90);
  EXPECT_GE(std::count_if(lows.begin(), lows.end(), [&](double s) { return s < t; }), 95);
  EXPECT_GE(std::count_if(highs.begin(), highs.end(), [&](double s) { return s >= t; }), 29);
}

TEST(Threshold, Fallbacks) {
  EXPECT_EQ(InferThreshold(SimilarityHistogram::FromSimilarities({})), kFallbackThreshold);
  const std::vector<double> flat(50, 0.5);
  EXPECT_EQ(InferThreshold(SimilarityHistogram::FromSimilarities(flat)), kFallbackThreshold);
  const std::vector<double> single = {0.1};
  EXPECT_EQ(InferThreshold(SimilarityHistogram::FromSimilarities(single)), kFallbackThreshold);
  // Two modes too close together.
  const std::vector<double> close = {0.50, 0.50, 0.50, 0.61, 0.61};
  EXPECT_EQ(InferThreshold(SimilarityHistogram::FromSimilarities(close)), kFallbackThreshold);
}

TEST(Threshold, FlatValleyMiddleAndClamp) {
  SimilarityHistogram h;
  h.bins.assign(20, 0);
  h.bins[2] = 10;
  h.bins[17] = 10;
  // Raw minimum spans bins 3..15; its middle is 9.
  EXPECT_DOUBLE_EQ(InferThreshold(h), 9.5 / 20.0);

  h.bins.assign(20, 0);
  h.bins[0] = 10;
  h.bins[4] = 10;
  EXPECT_DOUBLE_EQ(InferThreshold(h), kMinThreshold);
}

TEST(Cluster, TextbookComponents) {
  const std::vector<PairAnalysis> pairs = {P(0, 1, 0.9), P(1, 2, 0.85), P(3, 4, 0.95), P(2, 3, 0.1)};
  const auto clusters = ClusterPairs(pairs, 0.8);
  ASSERT_EQ(clusters.size(), 2u);
  EXPECT_EQ(clusters[0].files, (std::vector<FileId>{0, 1, 2}));
  EXPECT_EQ(clusters[1].files, (std::vector<FileId>{3, 4}));
  EXPECT_EQ(clusters[0].edges.size(), 2u);
  EXPECT_EQ(clusters[1].id, 1u);
  EXPECT_TRUE(ClusterPairs(pairs, 0.99).empty());
  EXPECT_EQ(ClusterPairs(pairs, 0.95).size(), 1u);
}

TEST(Cluster, MatchesClosureOracle) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<PairAnalysis> pairs;
    std::vector<testing::WeightedEdge> edges;
    for (FileId i = 0; i < n; ++i)
      for (FileId j = i + 1; j < n; ++j)
        if (unit(rng) < 0.08) {
          const double s = std::round(unit(rng) * 100) / 100;
          pairs.push_back(P(i, j, s));
          edges.push_back({i, j, s});
        }
    const double t = unit(rng);
    std::vector<std::vector<std::size_t>> got;
    for (const auto& c : ClusterPairs(pairs, t, Files(n))) got.push_back(c.files);
    ASSERT_EQ(got, testing::ClosureComponents(n, edges, t));
  }
}

TEST(Timeline, OrderingAndOrigin) {
  auto files = Files(4);
  files[0].timestamp = *ParseTimestamp("2024-03-01T10:00:00Z");
  files[1].timestamp = *ParseTimestamp("2024-01-01T10:00:00Z");
  files[2].timestamp = *ParseTimestamp("2024-02-01T10:00:00Z");
  const std::vector<FileId> members = {0, 1, 2, 3};
  const auto t = ClusterTimeline(members, files);
  ASSERT_EQ(t.dated.size(), 3u);
  EXPECT_EQ(t.dated[0].file, 1u);
  EXPECT_EQ(t.dated[1].file, 2u);
  EXPECT_EQ(t.dated[2].file, 0u);
  EXPECT_EQ(t.origin, 1u);
  EXPECT_EQ(t.undated, (std::vector<FileId>{3}));

  const auto none = ClusterTimeline(members, Files(4));
  EXPECT_TRUE(none.dated.empty());
  EXPECT_FALSE(none.origin);
  EXPECT_EQ(none.undated.size(), 4u);

  files[0].timestamp = files[2].timestamp = files[1].timestamp;
  const auto same = ClusterTimeline(std::vector<FileId>{2, 0, 1}, files);
  EXPECT_EQ(same.dated[0].file, 0u);
  EXPECT_EQ(same.dated[1].file, 1u);
  EXPECT_EQ(same.dated[2].file, 2u);
}

TEST(Graph, Singletons) {
  const auto files = Files(10);
  const std::vector<PairAnalysis> pairs = {P(3, 7, 0.9), P(1, 2, 0.3)};
  const auto hidden = BuildGraph(files, pairs, 0.8, false);
  EXPECT_EQ(hidden.nodes.size(), 2u);
  EXPECT_EQ(hidden.edges.size(), 1u);
  EXPECT_EQ(hidden.clusters.size(), 1u);

  const auto shown = BuildGraph(files, pairs, 0.8, true, true);
  EXPECT_EQ(shown.nodes.size(), 10u);
  EXPECT_EQ(shown.edges.size(), 1u);
  EXPECT_EQ(shown.nodes[3].display_name, "File 4");

  EXPECT_TRUE(BuildGraph(files, pairs, 0.95, false).edges.empty());
}

TEST(Overview, Statistics) {
  const auto files = Files(3);
  const std::vector<PairAnalysis> identical = {P(0, 1, 1.0)};
  const auto a = ComputeOverview(files, identical);
  EXPECT_EQ(a.highest_similarity, 1.0);
  EXPECT_EQ(a.average_similarity, 1.0);
  EXPECT_EQ(a.highest_band, SuspicionBand::kRed);
  EXPECT_EQ(a.total_lines, 30u);

  const auto b = ComputeOverview(files, {});
  EXPECT_EQ(b.highest_similarity, 0.0);
  EXPECT_EQ(b.average_band, SuspicionBand::kGreen);

  const std::vector<PairAnalysis> two = {P(0, 1, 0.2), P(1, 2, 0.9)};
  const auto c = ComputeOverview(files, two);
  EXPECT_DOUBLE_EQ(c.highest_similarity, 0.9);
  EXPECT_DOUBLE_EQ(c.average_similarity, 0.55);
  EXPECT_EQ(c.average_band, SuspicionBand::kOrange);
}

}  // namespace
}  // namespace simtrace
