#include <gtest/gtest.h>

#include <fmt/format.h>
#include <json.hpp>

#include "helpers.hpp"
#include "simtrace/csv.hpp"
#include "simtrace/error.hpp"
#include "simtrace/report_io.hpp"

namespace simtrace {
namespace {

using testing::CollectionOf;

const std::string kProgram =
    "def area(width, height):\n"
    "    result = width * height\n"
    "    if result > 100:\n"
    "        print(\"large\", result)\n"
    "    return result\n"
    "\n"
    "def perimeter(width, height):\n"
    "    total = 2 * (width + height)\n"
    "    for i in range(3):\n"
    "        total = total + i\n"
    "    return total\n";

Report SmallReport(std::vector<testing::NamedSource> sources, CollectionOptions options = {}) {
  options.threads = 1;
  return Analyze(CollectionOf(sources, options), options);
}

Report SyntheticReport(std::size_t files, std::size_t pairs) {
  Report r;
  r.options.language = "python";
  for (FileId i = 0; i < files; ++i) {
    SourceFile f;
    f.id = i;
    f.path = "dir/sub" + std::to_string(i) + ".py";
    f.line_count = 3;
    r.files.push_back(f);
    r.fingerprint_counts.push_back(10);
  }
  for (FileId i = 0; i < files && r.pairs.size() < pairs; ++i)
    for (FileId j = i + 1; j < files && r.pairs.size() < pairs; ++j) {
      PairAnalysis p;
      p.left = i;
      p.right = j;
      p.similarity = 0.5 + 0.01 * static_cast<double>(r.pairs.size() % 40);
      p.total_overlap = 10;
      p.longest_fragment = 4;
      r.pairs.push_back(p);
    }
  return r;
}

std::size_t CountOccurrences(const std::string& s, std::string_view needle) {
  std::size_t n = 0;
  for (std::size_t pos = 0; (pos = s.find(needle, pos)) != std::string::npos; ++pos) ++n;
  return n;
}

TEST(Terminal, IdenticalFilesOneRow) {
  const auto r = SmallReport({{"a.py", kProgram}, {"b.py", kProgram}});
  const auto text = FormatTerminal(r);
  EXPECT_NE(text.find("1.00"), std::string::npos);
  EXPECT_NE(text.find("a.py"), std::string::npos);
  EXPECT_EQ(CountOccurrences(text, "\n   1  "), 1u);
  EXPECT_EQ(CountOccurrences(text, "\n   2  "), 0u);
}

TEST(Terminal, AnonymizeHidesPaths) {
  const auto r = SmallReport({{"alice_hw.py", kProgram}, {"bob_hw.py", kProgram}});
  const auto text = FormatTerminal(r, {.anonymize = true});
  EXPECT_EQ(text.find("alice"), std::string::npos);
  EXPECT_EQ(text.find("bob"), std::string::npos);
  EXPECT_NE(text.find("File 1"), std::string::npos);
}

TEST(Terminal, TwentyRowsThenElision) {
  const auto r = SyntheticReport(10, 25);
  const auto text = FormatTerminal(r);
  std::size_t rows = 0;
  for (std::size_t i = 1; i <= 25; ++i) {
    rows += CountOccurrences(text, fmt::format("\n{:>4}  ", i));
  }
  EXPECT_EQ(rows, 20u);
  EXPECT_NE(text.find("... and 5 more pairs"), std::string::npos);
}

TEST(Csv, HeaderOnlyWithoutPairs) {
  Report r = SyntheticReport(2, 0);
  EXPECT_EQ(PairsCsv(r), "leftId,rightId,similarity,totalOverlap,longestFragment\n");
}

TEST(Csv, CommaInPathIsQuoted) {
  Report r = SyntheticReport(2, 1);
  r.files[0].path = "smith, john/main.py";
  r.files[0].author = "Smith, John";
  const auto text = FilesCsv(r);
  EXPECT_NE(text.find("\"smith, john/main.py\""), std::string::npos);
  const auto rows = csv::Parse(text);
  EXPECT_EQ(rows[1][1], "smith, john/main.py");
  EXPECT_EQ(rows[1][5], "Smith, John");
  EXPECT_EQ(FilesCsv(r, true).find("smith"), std::string::npos);
}

TEST(Csv, SimilarityFormatting) {
  EXPECT_EQ(FormatSimilarity(1.0), "1.000000");
  EXPECT_EQ(FormatSimilarity(10.0 / 12.0), "0.833333");
  // 1/128 = 0.0078125 exactly: a true tie, rounded to even.
  EXPECT_EQ(FormatSimilarity(1.0 / 128.0), "0.007812");
  EXPECT_EQ(FormatSimilarity(3.0 / 128.0), "0.023438");
}

TEST(Csv, RoundTrip) {
  const auto r = SmallReport({{"a.py", kProgram},
                              {"b.py", kProgram + "\nprint(area(2, 3))\n"},
                              {"c.py", "import os\nprint(os.getcwd())\n"}});
  const auto parsed = ParsePairsCsv(PairsCsv(r));
  ASSERT_EQ(parsed.size(), r.pairs.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    EXPECT_EQ(parsed[i].left, r.pairs[i].left);
    EXPECT_EQ(parsed[i].right, r.pairs[i].right);
    EXPECT_EQ(FormatSimilarity(parsed[i].similarity), FormatSimilarity(r.pairs[i].similarity));
    EXPECT_EQ(parsed[i].total_overlap, r.pairs[i].total_overlap);
    EXPECT_EQ(parsed[i].longest_fragment, r.pairs[i].longest_fragment);
  }
  EXPECT_THROW(ParsePairsCsv("a,b\n1,2\n"), Error);
}

TEST(Csv, WritesThreeFiles) {
  testing::TempDir dir;
  const auto r = SmallReport({{"a.py", kProgram}, {"b.py", kProgram}});
  WriteCsv(r, dir / "out");
  EXPECT_EQ(testing::ReadText(dir / "out/clusters.csv"), "clusterId,fileId\n0,0\n0,1\n");
  EXPECT_EQ(csv::Parse(testing::ReadText(dir / "out/files.csv")).size(), 3u);
  EXPECT_EQ(testing::ReadText(dir / "out/pairs.csv"), PairsCsv(r));
}

TEST(Json, DeterministicAndOrdered) {
  const std::vector<testing::NamedSource> sources = {
      {"a.py", kProgram}, {"b.py", kProgram}, {"c.py", kProgram + "x = 1\n"}};
  CollectionOptions threaded;
  threaded.threads = 4;
  const auto one = ToJson(SmallReport(sources), {.include_fragments = true});
  const auto two = ToJson(Analyze(CollectionOf(sources), threaded), {.include_fragments = true});
  EXPECT_EQ(testing::JsonWithoutCreatedAt(one), testing::JsonWithoutCreatedAt(two));
  EXPECT_NE(testing::JsonWithoutCreatedAt(one), one);

  const auto doc = nlohmann::ordered_json::parse(one);
  std::vector<std::string> keys;
  for (const auto& [key, _] : doc.items()) keys.push_back(key);
  const std::vector<std::string> expected = {
      "formatVersion", "createdAt", "options", "threshold", "thresholdInferred", "overview",
      "histogram", "files", "pairs", "clusters", "warnings"};
  EXPECT_EQ(keys, expected);
  EXPECT_EQ(doc["formatVersion"], 1);
  EXPECT_TRUE(doc["pairs"][0]["similarity"].is_number());
  EXPECT_TRUE(doc["pairs"][0].contains("fragments"));
}

TEST(Json, FragmentsOnlyWhenAsked) {
  const auto r = SmallReport({{"a.py", kProgram}, {"b.py", kProgram}});
  const auto doc = nlohmann::json::parse(ToJson(r));
  ASSERT_FALSE(doc["pairs"].empty());
  for (const auto& p : doc["pairs"]) {
    EXPECT_FALSE(p.contains("fragments"));
    EXPECT_FALSE(p.contains("diff"));
    EXPECT_LT(p["leftId"], p["rightId"]);
  }
}

TEST(Json, AnonymizedOutputHidesNamesAndAuthors) {
  const auto r = SmallReport({{"alice/hw.py", kProgram},
                              {"bob/hw.py", kProgram},
                              {"notes.txt", "ignored"},
                              {"info.csv", "filename,full_name\nalice/hw.py,Alice Liddell\n"}});
  const auto json = ToJson(r, {.include_fragments = true, .anonymize = true});
  EXPECT_EQ(json.find("alice"), std::string::npos);
  EXPECT_EQ(json.find("Alice"), std::string::npos);
  EXPECT_EQ(json.find("notes.txt"), std::string::npos);
  EXPECT_NE(json.find("Student 1"), std::string::npos);
}

TEST(Json, ExplicitThresholdIsRecorded) {
  CollectionOptions options;
  options.similarity_threshold = 0.6;
  const auto doc = nlohmann::json::parse(
      ToJson(SmallReport({{"a.py", kProgram}, {"b.py", kProgram}}, options)));
  EXPECT_EQ(doc["threshold"], 0.6);
  EXPECT_EQ(doc["thresholdInferred"], false);
  EXPECT_EQ(doc["options"]["similarityThreshold"], 0.6);
  EXPECT_EQ(doc["options"]["hash"]["modulus"], 9007199254740881ull);
}

TEST(Pipeline, RankedPairsBySimilarity) {
  const auto r = SyntheticReport(6, 15);
  const auto ranked = r.RankedPairs();
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    EXPECT_GE(ranked[i - 1]->similarity, ranked[i]->similarity);
  }
}

TEST(Pipeline, InvalidOptions) {
  CollectionOptions bad;
  bad.kgram_length = 0;
  EXPECT_THROW(SmallReport({{"a.py", "x"}, {"b.py", "y"}}, bad), Error);
}

}  // namespace
}  // namespace simtrace
