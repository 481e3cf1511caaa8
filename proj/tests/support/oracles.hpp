#pragma once

// Slow, independent reference implementations used to check the engine.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace simtrace::testing {

// Sum t_i * base^(k-i) mod modulus, powers computed from scratch.
std::uint64_t DirectPolynomialHash(std::span<const std::uint32_t> kinds, std::uint64_t base,
                                   std::uint64_t modulus);

// Every k-gram hash of `kinds`, each summed term by term against a power
// table built by repeated multiplication.
std::vector<std::uint64_t> DirectPolynomialHashes(std::span<const std::uint32_t> kinds,
                                                  std::size_t k, std::uint64_t base,
                                                  std::uint64_t modulus);

// Positions chosen by taking the rightmost minimum of every window of w,
// or the rightmost overall minimum when there are fewer than w values.
std::vector<std::size_t> WindowMinimaPositions(std::span<const std::uint64_t> values,
                                               std::size_t w);

struct Run {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t length = 0;

  friend bool operator==(const Run&, const Run&) = default;
  friend auto operator<=>(const Run&, const Run&) = default;
};

// Quadratic DP over common-suffix lengths: every maximal common run of at
// least min_length, minus runs whose two ranges both lie inside a strictly
// longer run. Sorted by (left, right).
std::vector<Run> MaximalCommonRuns(std::span<const std::uint64_t> left,
                                   std::span<const std::uint64_t> right,
                                   std::size_t min_length = 1);

struct WeightedEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  double weight = 0.0;
};

// Components of size >= 2 over edges with weight >= threshold, found with a
// boolean transitive closure. Members ascending; components ordered by size
// descending then smallest member.
std::vector<std::vector<std::size_t>> ClosureComponents(std::size_t n,
                                                        std::span<const WeightedEdge> edges,
                                                        double threshold);

// Insert/delete edit distance between line sequences: n + m - 2 * LCS.
template <typename T>
std::size_t InsertDeleteDistance(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return a.size() + b.size() - 2 * prev[b.size()];
}

}  // namespace simtrace::testing
