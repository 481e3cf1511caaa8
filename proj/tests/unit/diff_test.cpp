#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "simtrace/diff.hpp"

namespace simtrace {
namespace {

using Lines = std::vector<std::string_view>;

// Rebuilds both sides from the hunks.
std::pair<Lines, Lines> Replay(const std::vector<DiffHunk>& hunks, const Lines& a, const Lines& b) {
  Lines left, right;
  std::size_t li = 0, ri = 0;
  for (const auto& h : hunks) {
    EXPECT_EQ(h.left.start, li);
    EXPECT_EQ(h.right.start, ri);
    switch (h.op) {
      case DiffOp::kEqual:
        EXPECT_EQ(h.left.size(), h.right.size());
        for (std::size_t i = 0; i < h.left.size(); ++i) {
          EXPECT_EQ(a[h.left.start + i], b[h.right.start + i]);
          left.push_back(a[h.left.start + i]);
          right.push_back(b[h.right.start + i]);
        }
        break;
      case DiffOp::kDelete:
        EXPECT_EQ(h.right.size(), 0u);
        for (std::size_t i = h.left.start; i < h.left.end; ++i) left.push_back(a[i]);
        break;
      case DiffOp::kInsert:
        EXPECT_EQ(h.left.size(), 0u);
        for (std::size_t i = h.right.start; i < h.right.end; ++i) right.push_back(b[i]);
        break;
    }
    li = h.left.end;
    ri = h.right.end;
  }
  return {left, right};
}

TEST(Diff, ClassicInstance) {
  const Lines a = {"A", "B", "C", "A", "B", "B", "A"};
  const Lines b = {"C", "B", "A", "B", "A", "C"};
  const auto hunks = DiffLines(a, b);
  EXPECT_EQ(EditDistance(hunks), 5u);
  EXPECT_EQ(testing::InsertDeleteDistance(a, b), 5u);
  const auto [left, right] = Replay(hunks, a, b);
  EXPECT_EQ(left, a);
  EXPECT_EQ(right, b);
}

TEST(Diff, IdenticalAndEmpty) {
  const auto same = DiffLines("x\ny\nz\n", "x\ny\nz\n");
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0].op, DiffOp::kEqual);
  EXPECT_EQ(same[0].left, (LineRange{0, 3}));

  const auto grow = DiffLines("", "a\nb\nc");
  ASSERT_EQ(grow.size(), 1u);
  EXPECT_EQ(grow[0].op, DiffOp::kInsert);
  EXPECT_EQ(grow[0].right, (LineRange{0, 3}));

  EXPECT_TRUE(DiffLines("", "").empty());
}

TEST(Diff, SplitLines) {
  EXPECT_EQ(SplitLines("a\nb"), (Lines{"a", "b"}));
  EXPECT_EQ(SplitLines("a\nb\n"), (Lines{"a", "b"}));
  EXPECT_TRUE(SplitLines("").empty());
  EXPECT_EQ(SplitLines("\n"), (Lines{""}));
}

TEST(Diff, RandomAgainstDp) {
  std::mt19937_64 rng(6);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 200; ++trial) {
    Lines a(rng() % 30), b(rng() % 30);
    for (auto& l : a) l = alphabet[rng() % alphabet.size()];
    for (auto& l : b) l = alphabet[rng() % alphabet.size()];
    const auto hunks = DiffLines(a, b);
    ASSERT_EQ(EditDistance(hunks), testing::InsertDeleteDistance(a, b));
    const auto [left, right] = Replay(hunks, a, b);
    ASSERT_EQ(left, a);
    ASSERT_EQ(right, b);
    for (std::size_t i = 1; i < hunks.size(); ++i) ASSERT_NE(hunks[i].op, hunks[i - 1].op);
  }
}

}  // namespace
}  // namespace simtrace
