#include "simtrace/compare.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>

#include "parallel.hpp"

namespace simtrace {
namespace {

bool Contains(const SharedFragment& outer, const SharedFragment& inner) {
  return outer.left.start <= inner.left.start && inner.left.end <= outer.left.end &&
         outer.right.start <= inner.right.start && inner.right.end <= outer.right.end;
}

Region RegionOf(const FingerprintSequence& seq, const PrintRange& range) {
  Region r = seq.prints[range.start].region;
  for (std::size_t i = range.start + 1; i < range.end; ++i) r = Span(r, seq.prints[i].region);
  return r;
}

}  // namespace

std::vector<SharedFragment> FindSharedFragments(std::span<const Hash> left,
                                                std::span<const Hash> right,
                                                std::size_t min_length) {
  min_length = std::max<std::size_t>(min_length, 1);
  std::vector<std::pair<Hash, std::size_t>> index(right.size());
  for (std::size_t j = 0; j < right.size(); ++j) index[j] = {right[j], j};
  std::sort(index.begin(), index.end());

  // Matching cells of the table, row by row with ascending j. row_begin[i]
  // is the offset of row i; cell_run holds the diagonal run of each cell.
  std::vector<std::size_t> row_begin(left.size() + 1, 0);
  std::vector<std::size_t> cell_j;
  std::vector<std::size_t> cell_run;
  std::vector<SharedFragment> runs;
  for (std::size_t i = 0; i < left.size(); ++i) {
    row_begin[i] = cell_j.size();
    auto it = std::lower_bound(index.begin(), index.end(), std::pair<Hash, std::size_t>{left[i], 0});
    std::size_t prev = i > 0 ? row_begin[i - 1] : 0;
    const std::size_t prev_end = row_begin[i];
    for (; it != index.end() && it->first == left[i]; ++it) {
      const std::size_t j = it->second;
      while (prev < prev_end && cell_j[prev] + 1 < j) ++prev;
      std::size_t run;
      if (j > 0 && prev < prev_end && cell_j[prev] + 1 == j) {
        run = cell_run[prev];
        ++runs[run].left.end;
        ++runs[run].right.end;
      } else {
        run = runs.size();
        SharedFragment f;
        f.left = {i, i + 1};
        f.right = {j, j + 1};
        runs.push_back(f);
      }
      cell_j.push_back(j);
      cell_run.push_back(run);
    }
  }
  row_begin[left.size()] = cell_j.size();

  // A run is dropped when another run holds it on both sides. Such a run
  // passes through the first row of the dropped one.
  std::vector<SharedFragment> kept;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const auto& run = runs[r];
    if (run.length() < min_length) continue;
    bool contained = false;
    for (std::size_t c = row_begin[run.left.start]; c < row_begin[run.left.start + 1] && !contained; ++c) {
      contained = cell_run[c] != r && Contains(runs[cell_run[c]], run);
    }
    if (!contained) kept.push_back(run);
  }
  return kept;
}

std::vector<SharedFragment> FindSharedFragments(const FingerprintSequence& left,
                                                const FingerprintSequence& right,
                                                std::size_t min_length) {
  auto fragments = FindSharedFragments(left.Hashes(), right.Hashes(), min_length);
  for (auto& f : fragments) {
    f.left_region = RegionOf(left, f.left);
    f.right_region = RegionOf(right, f.right);
  }
  return fragments;
}

PairAnalysis ComputePairMetrics(const FingerprintSequence& left, const FingerprintSequence& right,
                                std::vector<SharedFragment> fragments) {
  PairAnalysis pair;
  pair.left = left.file_id;
  pair.right = right.file_id;
  const std::size_t total = left.prints.size() + right.prints.size();
  if (total == 0) {
    pair.degenerate = true;
    return pair;
  }

  std::vector<bool> left_covered(left.prints.size(), false);
  std::vector<bool> right_covered(right.prints.size(), false);
  for (const auto& f : fragments) {
    std::fill(left_covered.begin() + f.left.start, left_covered.begin() + f.left.end, true);
    std::fill(right_covered.begin() + f.right.start, right_covered.begin() + f.right.end, true);
    pair.longest_fragment = std::max(pair.longest_fragment, f.length());
  }
  pair.total_overlap = static_cast<std::size_t>(
      std::count(left_covered.begin(), left_covered.end(), true) +
      std::count(right_covered.begin(), right_covered.end(), true));
  pair.similarity = static_cast<double>(pair.total_overlap) / static_cast<double>(total);
  pair.fragments = std::move(fragments);
  return pair;
}

PairAnalysis ComparePair(const FingerprintSequence& left, const FingerprintSequence& right,
                         std::size_t min_fragment_length) {
  return ComputePairMetrics(left, right, FindSharedFragments(left, right, min_fragment_length));
}

std::vector<PairAnalysis> CompareCollection(std::span<const FingerprintSequence> sequences,
                                            const FingerprintIndex& index,
                                            const CollectionOptions& options) {
  std::unordered_map<FileId, const FingerprintSequence*> by_id;
  for (const auto& seq : sequences) by_id.emplace(seq.file_id, &seq);

  const auto candidates = index.CandidatePairs();
  std::vector<std::optional<PairAnalysis>> results(candidates.size());
  detail::ParallelFor(candidates.size(), options.threads, [&](std::size_t i) {
    const auto [a, b] = candidates[i];
    auto pair = ComparePair(*by_id.at(a), *by_id.at(b), options.min_fragment_length);
    if (pair.similarity > 0.0) results[i] = std::move(pair);
  });

  std::vector<PairAnalysis> pairs;
  for (auto& r : results) {
    if (r) pairs.push_back(std::move(*r));
  }
  return pairs;
}

PairView SelectPairView(const PairAnalysis& pair, double boundary) {
  return pair.similarity >= boundary ? PairView::kDiff : PairView::kFragments;
}

const char* ToString(PairView view) noexcept {
  return view == PairView::kDiff ? "diff" : "fragments";
}

}  // namespace simtrace
