#include "oracles.hpp"

#include <algorithm>
#include <limits>

namespace simtrace::testing {

std::uint64_t DirectPolynomialHash(std::span<const std::uint32_t> kinds, std::uint64_t base,
                                   std::uint64_t modulus) {
  __extension__ using Wide = unsigned __int128;
  const std::size_t k = kinds.size();
  Wide sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Wide power = 1;
    for (std::size_t e = 0; e < k - 1 - i; ++e) power = power * base % modulus;
    sum = (sum + power * kinds[i]) % modulus;
  }
  return static_cast<std::uint64_t>(sum);
}

std::vector<std::uint64_t> DirectPolynomialHashes(std::span<const std::uint32_t> kinds,
                                                  std::size_t k, std::uint64_t base,
                                                  std::uint64_t modulus) {
  __extension__ using Wide = unsigned __int128;
  std::vector<std::uint64_t> out;
  if (k == 0 || kinds.size() < k) return out;
  std::vector<Wide> power(k, 1);
  for (std::size_t e = 1; e < k; ++e) power[e] = power[e - 1] * base % modulus;
  for (std::size_t s = 0; s + k <= kinds.size(); ++s) {
    Wide sum = 0;
    for (std::size_t i = 0; i < k; ++i) sum = (sum + power[k - 1 - i] * kinds[s + i]) % modulus;
    out.push_back(static_cast<std::uint64_t>(sum));
  }
  return out;
}

std::vector<std::size_t> WindowMinimaPositions(std::span<const std::uint64_t> values,
                                               std::size_t w) {
  std::vector<std::size_t> out;
  if (values.empty()) return out;
  const std::size_t windows = values.size() >= w ? values.size() - w + 1 : 1;
  const std::size_t width = std::min(w, values.size());
  for (std::size_t s = 0; s < windows; ++s) {
    std::size_t best = s;
    for (std::size_t i = s; i < s + width; ++i) {
      if (values[i] <= values[best]) best = i;
    }
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Run> MaximalCommonRuns(std::span<const std::uint64_t> left,
                                   std::span<const std::uint64_t> right,
                                   std::size_t min_length) {
  const std::size_t n = left.size(), m = right.size();
  std::vector<std::vector<std::size_t>> suffix(n + 1, std::vector<std::size_t>(m + 1, 0));
  std::vector<Run> runs;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (left[i - 1] != right[j - 1]) continue;
      suffix[i][j] = suffix[i - 1][j - 1] + 1;
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t len = suffix[i][j];
      if (len == 0) continue;
      const bool extends = i < n && j < m && left[i] == right[j];
      if (!extends) runs.push_back({i - len, j - len, len});
    }
  }
  std::vector<Run> kept;
  for (const auto& r : runs) {
    if (r.length < min_length) continue;
    const bool contained = std::any_of(runs.begin(), runs.end(), [&](const Run& o) {
      return o.length > r.length && o.left <= r.left && r.left + r.length <= o.left + o.length &&
             o.right <= r.right && r.right + r.length <= o.right + o.length;
    });
    if (!contained) kept.push_back(r);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<std::vector<std::size_t>> ClosureComponents(std::size_t n,
                                                        std::span<const WeightedEdge> edges,
                                                        double threshold) {
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = 1;
  for (const auto& e : edges) {
    if (e.weight >= threshold) reach[e.a][e.b] = reach[e.b][e.a] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;

  std::vector<std::vector<std::size_t>> components;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) {
        members.push_back(j);
        seen[j] = 1;
      }
    }
    if (members.size() >= 2) components.push_back(std::move(members));
  }
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return components;
}

}  // namespace simtrace::testing
