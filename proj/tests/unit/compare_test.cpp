#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "simtrace/compare.hpp"
#include "simtrace/fingerprint.hpp"

namespace simtrace {
namespace {

FingerprintSequence Prints(FileId id, std::vector<Hash> hashes) {
  FingerprintSequence seq{id, {}};
  for (std::size_t i = 0; i < hashes.size(); ++i) {
    const auto row = static_cast<std::uint32_t>(i);
    seq.prints.push_back({hashes[i], i, i + 2, {row, 0, row, 5}});
  }
  return seq;
}

std::vector<testing::Run> AsRuns(const std::vector<SharedFragment>& fragments) {
  std::vector<testing::Run> out;
  for (const auto& f : fragments) {
    EXPECT_EQ(f.left.size(), f.right.size());
    out.push_back({f.left.start, f.right.start, f.length()});
  }
  return out;
}

TEST(Fragments, WorkedExample) {
  const std::vector<Hash> left = {1, 2, 3, 9, 4, 5};
  const std::vector<Hash> right = {1, 2, 3, 7, 4, 5};
  const auto fragments = FindSharedFragments(left, right);
  ASSERT_EQ(fragments.size(), 2u);
  EXPECT_EQ(fragments[0].length(), 3u);
  EXPECT_EQ(fragments[1].length(), 2u);
  EXPECT_EQ(AsRuns(fragments), testing::MaximalCommonRuns(left, right));

  const auto pair = ComparePair(Prints(0, left), Prints(1, right));
  EXPECT_EQ(pair.total_overlap, 10u);
  EXPECT_DOUBLE_EQ(pair.similarity, 10.0 / 12.0);
  EXPECT_EQ(pair.longest_fragment, 3u);
}

TEST(Fragments, IdenticalSequencesGiveOneFragment) {
  const std::vector<Hash> seq = {4, 8, 15, 16, 23, 42};
  const auto fragments = FindSharedFragments(seq, seq);
  ASSERT_EQ(fragments.size(), 1u);
  EXPECT_EQ(fragments[0].length(), seq.size());

  const std::vector<Hash> repeats = {7, 7, 7, 7};
  const auto rep = FindSharedFragments(repeats, repeats);
  ASSERT_EQ(rep.size(), 1u);
  EXPECT_EQ(rep[0].length(), 4u);
}

TEST(Fragments, DisjointAndMinimumLength) {
  const std::vector<Hash> a = {1, 2, 3};
  const std::vector<Hash> b = {4, 5, 6};
  EXPECT_TRUE(FindSharedFragments(a, b).empty());

  const std::vector<Hash> left = {1, 2, 3, 9, 4, 5};
  const std::vector<Hash> right = {1, 2, 3, 7, 4, 5};
  const auto long_only = FindSharedFragments(left, right, 3);
  ASSERT_EQ(long_only.size(), 1u);
  EXPECT_EQ(long_only[0].length(), 3u);
}

TEST(Fragments, RegionsSpanTheRun) {
  const auto fragments = FindSharedFragments(Prints(0, {1, 2, 3}), Prints(1, {0, 1, 2, 3}));
  ASSERT_EQ(fragments.size(), 1u);
  EXPECT_EQ(fragments[0].left_region, (Region{0, 0, 2, 5}));
  EXPECT_EQ(fragments[0].right_region, (Region{1, 0, 3, 5}));
}

TEST(Fragments, MatchesOracleOnSmallAlphabets) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Hash alphabet = 2 + rng() % 4;
    std::vector<Hash> a(rng() % 40), b(rng() % 40);
    for (auto& h : a) h = rng() % alphabet;
    for (auto& h : b) h = rng() % alphabet;
    const std::size_t min_len = 1 + rng() % 3;
    ASSERT_EQ(AsRuns(FindSharedFragments(a, b, min_len)), testing::MaximalCommonRuns(a, b, min_len));
  }
}

TEST(Metrics, Boundaries) {
  const auto same = ComparePair(Prints(0, {1, 2, 3}), Prints(1, {1, 2, 3}));
  EXPECT_DOUBLE_EQ(same.similarity, 1.0);
  const auto none = ComparePair(Prints(0, {1, 2, 3}), Prints(1, {4, 5}));
  EXPECT_DOUBLE_EQ(none.similarity, 0.0);
  EXPECT_FALSE(none.degenerate);
  const auto empty = ComparePair(Prints(0, {}), Prints(1, {}));
  EXPECT_TRUE(empty.degenerate);
  EXPECT_DOUBLE_EQ(empty.similarity, 0.0);
}

TEST(Metrics, CoverageCountsOccurrences) {
  // The shared hash 5 occurs twice on the left.
  const auto pair = ComparePair(Prints(0, {5, 1, 5}), Prints(1, {5, 2}));
  EXPECT_EQ(pair.total_overlap, 3u);
  EXPECT_DOUBLE_EQ(pair.similarity, 3.0 / 5.0);
}

TEST(Metrics, Symmetric) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Hash> a(rng() % 30), b(rng() % 30);
    for (auto& h : a) h = rng() % 4;
    for (auto& h : b) h = rng() % 4;
    const auto ab = ComparePair(Prints(0, a), Prints(1, b));
    const auto ba = ComparePair(Prints(1, b), Prints(0, a));
    ASSERT_DOUBLE_EQ(ab.similarity, ba.similarity);
    ASSERT_EQ(ab.total_overlap, ba.total_overlap);
    ASSERT_EQ(ab.longest_fragment, ba.longest_fragment);
  }
}

TEST(Collection, IdenticalAndDisjoint) {
  std::vector<FingerprintSequence> same = {Prints(0, {1, 2}), Prints(1, {1, 2}), Prints(2, {1, 2})};
  const auto pairs = CompareCollection(same, FingerprintIndex(same), {});
  ASSERT_EQ(pairs.size(), 3u);
  for (const auto& p : pairs) EXPECT_DOUBLE_EQ(p.similarity, 1.0);

  std::vector<FingerprintSequence> apart = {Prints(0, {1, 2}), Prints(1, {3, 4}), Prints(2, {5})};
  EXPECT_TRUE(CompareCollection(apart, FingerprintIndex(apart), {}).empty());
}

TEST(Collection, IndexAgreesWithAllPairs) {
  std::mt19937_64 rng(5);
  std::vector<FingerprintSequence> seqs;
  for (FileId id = 0; id < 20; ++id) {
    std::vector<Hash> h(10 + rng() % 30);
    for (auto& x : h) x = rng() % 60;
    seqs.push_back(Prints(id, h));
  }
  for (unsigned threads : {1u, 4u}) {
    CollectionOptions options;
    options.threads = threads;
    const auto pairs = CompareCollection(seqs, FingerprintIndex(seqs), options);
    std::vector<PairAnalysis> brute;
    for (FileId i = 0; i < seqs.size(); ++i)
      for (FileId j = i + 1; j < seqs.size(); ++j) {
        auto p = ComparePair(seqs[i], seqs[j]);
        if (p.similarity > 0) brute.push_back(std::move(p));
      }
    ASSERT_EQ(pairs.size(), brute.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      EXPECT_EQ(pairs[i].left, brute[i].left);
      EXPECT_EQ(pairs[i].right, brute[i].right);
      EXPECT_EQ(pairs[i].similarity, brute[i].similarity);
      EXPECT_EQ(pairs[i].total_overlap, brute[i].total_overlap);
      EXPECT_EQ(pairs[i].longest_fragment, brute[i].longest_fragment);
    }
  }
}

// Appending keeps every earlier pick. New picks among the old k-grams can
// only come from the last w - 1 of them; without such a pick neither the
// overlap nor the similarity grows.
TEST(PairMetrics, AppendingUnrelatedTokens) {
  const std::size_t k = 5, w = 4;
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<TokenKind> shared_kind(0, 40);
  std::uniform_int_distribution<TokenKind> fresh_kind(500000, 900000);
  auto file = [](FileId id, const std::vector<TokenKind>& kinds) {
    TokenizedFile f;
    f.file_id = id;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      const auto col = static_cast<std::uint32_t>(i);
      f.tokens.push_back({kinds[i], {0, col, 0, col + 1}});
    }
    return f;
  };
  int boundary_picks = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<TokenKind> a(100 + rng() % 300);
    for (auto& t : a) t = shared_kind(rng);
    auto b = a;
    for (int e = 0; e < 10; ++e) b[rng() % b.size()] = shared_kind(rng);
    auto longer = a;
    for (std::size_t i = 0, n = 1 + rng() % 60; i < n; ++i) longer.push_back(fresh_kind(rng));

    const auto old_prints = FingerprintFile(file(0, a), k, w);
    const auto new_prints = FingerprintFile(file(0, longer), k, w);
    std::set<std::size_t> old_starts, gained;
    for (const auto& p : old_prints.prints) old_starts.insert(p.token_start);
    std::set<std::size_t> new_starts;
    for (const auto& p : new_prints.prints) new_starts.insert(p.token_start);
    for (std::size_t s : old_starts) EXPECT_TRUE(new_starts.contains(s)) << "trial " << trial;
    const std::size_t old_kgrams = a.size() - k + 1;
    for (std::size_t s : new_starts) {
      if (s < old_kgrams && !old_starts.contains(s)) gained.insert(s);
    }
    for (std::size_t s : gained) EXPECT_GE(s + w - 1, old_kgrams) << "trial " << trial;
    if (!gained.empty()) {
      ++boundary_picks;
      continue;
    }

    const auto right = FingerprintFile(file(1, b), k, w);
    const auto before = ComparePair(old_prints, right);
    const auto after = ComparePair(new_prints, right);
    EXPECT_LE(after.total_overlap, before.total_overlap) << "trial " << trial;
    EXPECT_LE(after.similarity, before.similarity) << "trial " << trial;
  }
  EXPECT_LT(boundary_picks, 300);
}

TEST(PairView, Boundary) {
  PairAnalysis p;
  p.similarity = 1.0;
  EXPECT_EQ(SelectPairView(p), PairView::kDiff);
  p.similarity = 0.3;
  EXPECT_EQ(SelectPairView(p), PairView::kFragments);
  p.similarity = 0.8;
  EXPECT_EQ(SelectPairView(p), PairView::kDiff);
  EXPECT_STREQ(ToString(PairView::kDiff), "diff");
}

}  // namespace
}  // namespace simtrace
