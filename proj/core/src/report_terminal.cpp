#include <fmt/format.h>

#include "simtrace/report_io.hpp"

namespace simtrace {

std::string FormatTerminal(const Report& report, const TerminalOptions& options) {
  const auto& ov = report.overview;
  auto name = [&](FileId id) {
    return options.anonymize || id >= report.files.size() ? Pseudonym(id) : report.files[id].path;
  };

  std::string out;
  fmt::format_to(std::back_inserter(out), "Files:              {} ({}, {} lines)\n",
                 ov.file_count, report.options.language, ov.total_lines);
  fmt::format_to(std::back_inserter(out), "Threshold:          {:.2f} ({})\n", report.threshold,
                 report.threshold_inferred ? "inferred" : "explicit");
  fmt::format_to(std::back_inserter(out), "Highest similarity: {:.2f} ({})\n",
                 ov.highest_similarity, ToString(ov.highest_band));
  fmt::format_to(std::back_inserter(out), "Average similarity: {:.2f} ({})\n",
                 ov.average_similarity, ToString(ov.average_band));
  fmt::format_to(std::back_inserter(out), "Pairs:              {}\n", report.pairs.size());
  fmt::format_to(std::back_inserter(out), "Clusters:           {}\n", report.clusters.size());

  const auto ranked = report.RankedPairs();
  if (ranked.empty()) {
    out += "\nNo shared fragments found.\n";
    return out;
  }

  std::size_t width = 4;
  const std::size_t rows = std::min(options.max_rows, ranked.size());
  for (std::size_t i = 0; i < rows; ++i) {
    width = std::max({width, name(ranked[i]->left).size(), name(ranked[i]->right).size()});
  }

  fmt::format_to(std::back_inserter(out), "\n{:>4}  {:>10}  {:>8}  {:>8}  {:<{}}  {}\n", "#",
                 "Similarity", "Overlap", "Longest", "Left", width, "Right");
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& p = *ranked[i];
    fmt::format_to(std::back_inserter(out), "{:>4}  {:>10.2f}  {:>8}  {:>8}  {:<{}}  {}\n", i + 1,
                   p.similarity, p.total_overlap, p.longest_fragment, name(p.left), width,
                   name(p.right));
  }
  if (ranked.size() > rows) {
    fmt::format_to(std::back_inserter(out), "... and {} more pairs (see --format csv or json)\n",
                   ranked.size() - rows);
  }
  return out;
}

}  // namespace simtrace
