#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "simtrace/fingerprint.hpp"
#include "simtrace/options.hpp"

namespace simtrace {

// Half-open index range [start, end) into a fingerprint sequence.
struct PrintRange {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  friend bool operator==(const PrintRange&, const PrintRange&) = default;
  friend auto operator<=>(const PrintRange&, const PrintRange&) = default;
};

struct SharedFragment {
  PrintRange left;
  PrintRange right;
  Region left_region;
  Region right_region;

  std::size_t length() const { return left.size(); }
};

struct PairAnalysis {
  FileId left = 0;
  FileId right = 0;
  double similarity = 0.0;
  std::size_t total_overlap = 0;
  std::size_t longest_fragment = 0;
  bool degenerate = false;  // both sequences empty
  std::vector<SharedFragment> fragments;
};

// Every maximal common run of equal hashes with length >= min_length.
// A run whose ranges are contained, on both sides, in another reported run
// is dropped. Sorted by (left.start, right.start).
std::vector<SharedFragment> FindSharedFragments(std::span<const Hash> left,
                                                std::span<const Hash> right,
                                                std::size_t min_length = 1);

// Same, with source regions filled in from the sequences.
std::vector<SharedFragment> FindSharedFragments(
    const FingerprintSequence& left, const FingerprintSequence& right,
    std::size_t min_length = 1);

// Coverage of the fragments counted per fingerprint occurrence on each side;
// similarity = covered / (|left| + |right|).
PairAnalysis ComputePairMetrics(const FingerprintSequence& left,
                                const FingerprintSequence& right,
                                std::vector<SharedFragment> fragments);

PairAnalysis ComparePair(const FingerprintSequence& left,
                         const FingerprintSequence& right,
                         std::size_t min_fragment_length = 1);

// Compares every candidate pair from the index (in parallel when threads !=
// 1). Pairs with similarity 0 are left out. Sorted by (left, right).
std::vector<PairAnalysis> CompareCollection(
    std::span<const FingerprintSequence> sequences,
    const FingerprintIndex& index, const CollectionOptions& options);

enum class PairView { kFragments, kDiff };

PairView SelectPairView(const PairAnalysis& pair,
                        double boundary = kDiffViewBoundary);

const char* ToString(PairView view) noexcept;

}  // namespace simtrace
