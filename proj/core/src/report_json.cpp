#include <json.hpp>

#include "simtrace/diff.hpp"
#include "simtrace/fingerprint.hpp"
#include "simtrace/report_io.hpp"

namespace simtrace {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
Json OrNull(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json RegionJson(const Region& r) {
  return Json{{"startRow", r.start_row}, {"startCol", r.start_col},
              {"endRow", r.end_row},     {"endCol", r.end_col}};
}

Json OptionsJson(const Report& report) {
  const auto& o = report.options;
  Json grammars = Json::object();
  for (const auto& [lang, version] : report.grammar_versions) grammars[lang] = version;
  return Json{
      {"language", o.language},
      {"kgramLength", o.kgram_length},
      {"windowLength", o.window_length},
      {"minFragmentLength", o.min_fragment_length},
      {"similarityThreshold",
       o.similarity_threshold ? Json(*o.similarity_threshold) : Json("auto")},
      {"maskNumbers", o.mask_numbers},
      {"hash", {{"modulus", kHashModulus}, {"base", kHashBase}}},
      {"grammarVersions", grammars},
      {"display",
       {{"viewBoundary", kDiffViewBoundary},
        {"bands", {{"orange", kOrangeBandStart}, {"red", kRedBandStart}}},
        {"histogramBins", report.histogram.bin_count}}},
  };
}

Json FileJson(const Report& report, const SourceFile& f, bool anonymize) {
  const auto& nn = f.id < report.nearest.size() ? report.nearest[f.id] : NearestNeighbour{};
  std::optional<std::string> author = f.author;
  if (anonymize && author) author = AuthorPseudonym(f.id);
  return Json{
      {"id", f.id},
      {"path", anonymize ? Pseudonym(f.id) : f.path},
      {"lineCount", f.line_count},
      {"fingerprintCount",
       f.id < report.fingerprint_counts.size() ? report.fingerprint_counts[f.id] : 0},
      {"label", OrNull(f.label)},
      {"author", OrNull(author)},
      {"createdAt", f.timestamp ? Json(FormatTimestamp(*f.timestamp)) : Json(nullptr)},
      {"nearestNeighbour", OrNull(nn.neighbour)},
      {"nearestSimilarity", nn.similarity},
      {"content", f.content},
  };
}

Json PairJson(const Report& report, const PairAnalysis& p, bool include_fragments) {
  Json j{
      {"leftId", p.left},
      {"rightId", p.right},
      {"similarity", p.similarity},
      {"totalOverlap", p.total_overlap},
      {"longestFragment", p.longest_fragment},
      {"view", ToString(SelectPairView(p))},
  };
  if (!include_fragments) return j;

  Json fragments = Json::array();
  for (const auto& f : p.fragments) {
    fragments.push_back({
        {"length", f.length()},
        {"left", {{"start", f.left.start}, {"end", f.left.end}, {"region", RegionJson(f.left_region)}}},
        {"right",
         {{"start", f.right.start}, {"end", f.right.end}, {"region", RegionJson(f.right_region)}}},
    });
  }
  j["fragments"] = std::move(fragments);

  Json hunks = Json::array();
  if (p.left < report.files.size() && p.right < report.files.size()) {
    for (const auto& h : DiffLines(report.files[p.left].content, report.files[p.right].content)) {
      hunks.push_back({{"op", ToString(h.op)},
                       {"left", {h.left.start, h.left.end}},
                       {"right", {h.right.start, h.right.end}}});
    }
  }
  j["diff"] = std::move(hunks);
  return j;
}

Json ClusterJson(const Cluster& c) {
  Json edges = Json::array();
  for (const auto& [l, r] : c.edges) edges.push_back({l, r});
  Json timeline = Json::array();
  for (const auto& e : c.timeline.dated) {
    timeline.push_back({{"fileId", e.file}, {"createdAt", FormatTimestamp(e.timestamp)}});
  }
  return Json{
      {"id", c.id},
      {"fileIds", c.files},
      {"edges", edges},
      {"timeline", timeline},
      {"undated", c.timeline.undated},
      {"origin", OrNull(c.timeline.origin)},
  };
}

// Anonymized output keeps only the warning count.
Json AnonymizedWarnings(const std::vector<std::string>& warnings) {
  Json out = Json::array();
  if (!warnings.empty()) {
    out.push_back(std::to_string(warnings.size()) + " warning(s) withheld from anonymized output");
  }
  return out;
}

}  // namespace

std::string ToJson(const Report& report, const JsonOptions& options) {
  const auto& ov = report.overview;
  Json files = Json::array();
  for (const auto& f : report.files) files.push_back(FileJson(report, f, options.anonymize));
  Json pairs = Json::array();
  for (const auto& p : report.pairs) pairs.push_back(PairJson(report, p, options.include_fragments));
  Json clusters = Json::array();
  for (const auto& c : report.clusters) clusters.push_back(ClusterJson(c));

  Json doc{
      {"formatVersion", report.format_version},
      {"createdAt", FormatTimestamp(report.created_at)},
      {"options", OptionsJson(report)},
      {"threshold", report.threshold},
      {"thresholdInferred", report.threshold_inferred},
      {"overview",
       {{"fileCount", ov.file_count},
        {"totalLines", ov.total_lines},
        {"highestSimilarity", ov.highest_similarity},
        {"averageSimilarity", ov.average_similarity},
        {"highestBand", ToString(ov.highest_band)},
        {"averageBand", ToString(ov.average_band)},
        {"pairCount", report.pairs.size()},
        {"clusterCount", report.clusters.size()}}},
      {"histogram",
       {{"binCount", report.histogram.bin_count},
        {"binWidth", report.histogram.bin_width()},
        {"bins", report.histogram.bins},
        {"isolated", report.histogram.isolated}}},
      {"files", std::move(files)},
      {"pairs", std::move(pairs)},
      {"clusters", std::move(clusters)},
      {"warnings", options.anonymize ? AnonymizedWarnings(report.warnings) : Json(report.warnings)},
  };
  return doc.dump(options.indent) + "\n";
}

}  // namespace simtrace
