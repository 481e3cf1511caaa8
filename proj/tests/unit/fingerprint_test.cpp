#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "simtrace/fingerprint.hpp"

namespace simtrace {
namespace {

std::vector<KgramHash> Seq(std::initializer_list<Hash> values) {
  std::vector<KgramHash> out;
  std::size_t i = 0;
  for (Hash v : values) out.push_back({v, i++});
  return out;
}

TEST(HashKgrams, Boundaries) {
  const std::vector<TokenKind> kinds = {3, 1, 4, 1, 5};
  EXPECT_TRUE(HashKgrams(kinds, 6).empty());
  EXPECT_EQ(HashKgrams(kinds, 5).size(), 1u);
  EXPECT_EQ(HashKgrams(kinds, 2).size(), 4u);
  EXPECT_EQ(HashKgrams(kinds, 3), HashKgrams(kinds, 3));
}

TEST(HashKgrams, SmallValueByHand) {
  const std::vector<TokenKind> kinds = {2, 5, 7};
  const auto h = HashKgrams(kinds, 3);
  ASSERT_EQ(h.size(), 1u);
  const Hash b = kHashBase;
  EXPECT_EQ(h[0].hash, (2 * b * b + 5 * b + 7) % kHashModulus);
}

TEST(HashKgrams, RollingMatchesDirect) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<TokenKind> kind(0, kMaxTokenKind);
  for (std::size_t k : {1u, 2u, 5u, 23u, 40u}) {
    std::vector<TokenKind> kinds(300);
    for (auto& t : kinds) t = kind(rng);
    const auto hashes = HashKgrams(kinds, k);
    ASSERT_EQ(hashes.size(), kinds.size() - k + 1);
    for (const auto& h : hashes) {
      const std::span<const TokenKind> window(kinds.data() + h.start, k);
      ASSERT_EQ(h.hash, testing::DirectPolynomialHash(window, kHashBase, kHashModulus));
      ASSERT_LT(h.hash, kHashBound);
    }
  }
}

TEST(Winnow, HandExample) {
  const auto picked = Winnow(Seq({5, 3, 8, 2, 9}), 3);
  const std::vector<KgramHash> expected = {{3, 1}, {2, 3}};
  EXPECT_EQ(picked, expected);
}

TEST(Winnow, WindowOfOneKeepsEverything) {
  const auto seq = Seq({4, 4, 1, 9});
  EXPECT_EQ(Winnow(seq, 1), seq);
}

TEST(Winnow, ShortInputKeepsRightmostMinimum) {
  const std::vector<KgramHash> expected = {{1, 2}};
  EXPECT_EQ(Winnow(Seq({3, 1, 1, 5}), 10), expected);
  EXPECT_TRUE(Winnow({}, 4).empty());
}

TEST(Winnow, MatchesBruteForceOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 120;
    const std::size_t w = 1 + rng() % 20;
    const Hash alphabet = trial % 2 ? 5 : kHashModulus;
    std::vector<KgramHash> seq;
    std::vector<std::uint64_t> values;
    for (std::size_t i = 0; i < n; ++i) {
      values.push_back(rng() % alphabet);
      seq.push_back({values.back(), i});
    }
    std::vector<std::size_t> got;
    for (const auto& p : Winnow(seq, w)) got.push_back(p.start);
    ASSERT_EQ(got, testing::WindowMinimaPositions(values, w)) << "n=" << n << " w=" << w;
  }
}

TokenizedFile FileOf(FileId id, std::vector<TokenKind> kinds) {
  TokenizedFile f{id, {}};
  std::uint32_t col = 0;
  for (auto k : kinds) {
    f.tokens.push_back({k, {0, col, 0, col + 1}});
    col += 2;
  }
  return f;
}

TEST(FingerprintFile, SpansAndRegions) {
  const auto file = FileOf(4, {9, 8, 7, 6, 5, 4, 3, 2, 1});
  const auto seq = FingerprintFile(file, 3, 2);
  EXPECT_EQ(seq.file_id, 4u);
  ASSERT_FALSE(seq.prints.empty());
  for (const auto& p : seq.prints) {
    EXPECT_EQ(p.token_end, p.token_start + 2);
    EXPECT_EQ(p.region.start_col, 2 * p.token_start);
    EXPECT_EQ(p.region.end_col, 2 * p.token_end + 1);
  }
  EXPECT_TRUE(FingerprintFile(FileOf(0, {1, 2}), 3, 2).prints.empty());
}

TEST(Index, IdenticalFilesShareEveryHash) {
  const auto a = FingerprintFile(FileOf(0, {1, 2, 3, 4, 5, 6, 7, 8}), 3, 2);
  const auto b = FingerprintFile(FileOf(1, {1, 2, 3, 4, 5, 6, 7, 8}), 3, 2);
  const std::vector<FingerprintSequence> seqs = {a, b};
  const FingerprintIndex index(seqs);
  for (const auto& [hash, postings] : index.entries()) {
    EXPECT_GE(postings.size(), 2u);
    EXPECT_TRUE(std::is_sorted(postings.begin(), postings.end()));
  }
  const std::vector<std::pair<FileId, FileId>> expected = {{0, 1}};
  EXPECT_EQ(index.CandidatePairs(), expected);
}

TEST(Index, DisjointKgramsShareNothing) {
  // Same alphabet, no common 3-gram.
  const auto a = FingerprintFile(FileOf(0, {1, 1, 2, 2, 1, 1, 2, 2}), 3, 1);
  const auto b = FingerprintFile(FileOf(1, {1, 2, 1, 2, 1, 2, 1, 2}), 3, 1);
  std::set<Hash> ha, hb;
  for (auto h : a.Hashes()) ha.insert(h);
  for (auto h : b.Hashes()) hb.insert(h);
  std::vector<Hash> common;
  std::set_intersection(ha.begin(), ha.end(), hb.begin(), hb.end(), std::back_inserter(common));
  ASSERT_TRUE(common.empty());

  const std::vector<FingerprintSequence> seqs = {a, b};
  const FingerprintIndex index(seqs);
  for (const auto& [hash, postings] : index.entries()) {
    EXPECT_EQ(postings.front().file_id, postings.back().file_id);
  }
  EXPECT_TRUE(index.CandidatePairs().empty());
}

TEST(Index, Empty) {
  const FingerprintIndex index(std::span<const FingerprintSequence>{});
  EXPECT_TRUE(index.empty());
  EXPECT_EQ(index.Find(42), nullptr);
}

}  // namespace
}  // namespace simtrace
