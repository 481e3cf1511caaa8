#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace simtrace {

enum class DiffOp { kEqual, kInsert, kDelete };

const char* ToString(DiffOp op) noexcept;

// Half-open line range.
struct LineRange {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  friend bool operator==(const LineRange&, const LineRange&) = default;
};

// Equal hunks cover both sides; delete hunks have an empty right range and
// insert hunks an empty left range, each anchored at the current position.
struct DiffHunk {
  DiffOp op = DiffOp::kEqual;
  LineRange left;
  LineRange right;

  friend bool operator==(const DiffHunk&, const DiffHunk&) = default;
};

std::vector<std::string_view> SplitLines(std::string_view content);

// Minimal line-level edit script (Myers' O(ND) greedy algorithm), adjacent
// hunks of the same kind merged.
std::vector<DiffHunk> DiffLines(const std::vector<std::string_view>& left,
                                const std::vector<std::string_view>& right);

std::vector<DiffHunk> DiffLines(std::string_view left, std::string_view right);

// Inserted plus deleted lines.
std::size_t EditDistance(const std::vector<DiffHunk>& hunks);

}  // namespace simtrace
