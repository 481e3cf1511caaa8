#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace simtrace {

inline constexpr std::size_t kDefaultKgramLength = 23;
inline constexpr std::size_t kDefaultWindowLength = 17;
inline constexpr std::size_t kDefaultMinFragmentLength = 1;

// Pair view selection: similarity at or above this shows the diff view.
inline constexpr double kDiffViewBoundary = 0.8;

// Suspicion colour bands for overview statistics.
inline constexpr double kOrangeBandStart = 0.5;
inline constexpr double kRedBandStart = 0.75;

struct CollectionOptions {
  std::string language = "auto";
  std::size_t kgram_length = kDefaultKgramLength;
  std::size_t window_length = kDefaultWindowLength;
  std::size_t min_fragment_length = kDefaultMinFragmentLength;
  // nullopt means "auto": inferred from the nearest-neighbour histogram.
  std::optional<double> similarity_threshold;
  bool mask_numbers = false;
  bool allow_fallback = true;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  bool auto_language() const { return language == "auto"; }

  // Throws Error(kInvalidOptions) on k = 0, w = 0, min fragment = 0 or an
  // explicit threshold outside [0, 1].
  void Validate() const;
};

}  // namespace simtrace
