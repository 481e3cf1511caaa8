#include <algorithm>

#include "parallel.hpp"
#include "simtrace/fingerprint.hpp"
#include "simtrace/report.hpp"
#include "simtrace/tokenize.hpp"

namespace simtrace {

std::vector<const PairAnalysis*> Report::RankedPairs() const {
  std::vector<const PairAnalysis*> ranked;
  ranked.reserve(pairs.size());
  for (const auto& p : pairs) ranked.push_back(&p);
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto* a, const auto* b) {
    return a->similarity > b->similarity;
  });
  return ranked;
}

Report Analyze(Collection collection, const CollectionOptions& options) {
  options.Validate();

  Report report;
  report.options = options;
  report.options.language = collection.language;
  report.grammar_versions[collection.language] =
      GrammarVersion(collection.language, options.allow_fallback);
  report.created_at = std::chrono::floor<std::chrono::milliseconds>(std::chrono::system_clock::now());
  report.files = std::move(collection.files);
  report.warnings = std::move(collection.warnings);

  const auto& files = report.files;
  const TokenizeOptions tokenize_options{options.allow_fallback, options.mask_numbers};
  std::vector<FingerprintSequence> sequences(files.size());
  detail::ParallelFor(files.size(), options.threads, [&](std::size_t i) {
    const auto tokens = Tokenize(files[i], tokenize_options);
    sequences[i] = FingerprintFile(tokens, options.kgram_length, options.window_length);
  });

  report.fingerprint_counts.reserve(files.size());
  for (const auto& seq : sequences) report.fingerprint_counts.push_back(seq.prints.size());

  const FingerprintIndex index(sequences);
  report.pairs = CompareCollection(sequences, index, options);

  report.nearest = NearestNeighbours(report.pairs, files.size());
  report.histogram = SimilarityHistogram::FromNeighbours(report.nearest);
  report.overview = ComputeOverview(files, report.pairs);
  if (options.similarity_threshold) {
    report.threshold = *options.similarity_threshold;
    report.threshold_inferred = false;
  } else {
    report.threshold = InferThreshold(report.histogram);
    report.threshold_inferred = true;
  }
  report.clusters = ClusterPairs(report.pairs, report.threshold, files);
  return report;
}

Report AnalyzePath(const std::filesystem::path& source, const CollectionOptions& options) {
  return Analyze(LoadCollection(source, options), options);
}

}  // namespace simtrace
