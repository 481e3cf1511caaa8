#include <gtest/gtest.h>

#include "helpers.hpp"
#include "simtrace/csv.hpp"
#include "simtrace/error.hpp"
#include "simtrace/ingest.hpp"
#include "simtrace/language.hpp"
#include "zip_writer.hpp"

namespace simtrace {
namespace {

using testing::TempDir;
using testing::WriteText;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no simtrace::Error thrown";
  return ErrorCode::kIo;
}

TEST(Ingest, DirectoryWithMetadata) {
  TempDir dir;
  WriteText(dir / "a.py", "x = 1\n");
  WriteText(dir / "b.py", "y = 2\n");
  WriteText(dir / "info.csv",
            "filename,full_name,label,created_at\n"
            "a.py,Alice,groupA,2024-01-02T10:00:00Z\n");

  const auto c = LoadCollection(dir.path(), {});
  ASSERT_EQ(c.files.size(), 2u);
  EXPECT_EQ(c.language, "python");
  EXPECT_EQ(c.files[0].path, "a.py");
  EXPECT_EQ(c.files[0].id, 0u);
  EXPECT_EQ(c.files[1].id, 1u);
  EXPECT_EQ(c.files[0].author, "Alice");
  EXPECT_EQ(c.files[0].label, "groupA");
  ASSERT_TRUE(c.files[0].timestamp);
  EXPECT_EQ(FormatTimestamp(*c.files[0].timestamp), "2024-01-02T10:00:00Z");
  EXPECT_FALSE(c.files[1].author);
}

TEST(Ingest, ZipMajorityLanguageExcludesMinority) {
  TempDir dir;
  testing::WriteZipFile(dir / "sub.zip", {{"a.py", "x = 1\n"},
                                          {"c.py", "z = 3\n", false},
                                          {"b.js", "let y = 2;\n"}});
  const auto c = LoadCollection(dir / "sub.zip", {});
  EXPECT_EQ(c.language, "python");
  ASSERT_EQ(c.files.size(), 2u);
  EXPECT_EQ(c.files[0].path, "a.py");
  EXPECT_EQ(c.files[1].path, "c.py");
  ASSERT_EQ(c.warnings.size(), 1u);
  EXPECT_NE(c.warnings[0].find("b.js"), std::string::npos);
}

TEST(Ingest, ZipWithTwoFilesOfDifferentLanguagesIsAmbiguous) {
  TempDir dir;
  testing::WriteZipFile(dir / "sub.zip", {{"a.py", "x = 1\n"}, {"b.js", "let y = 2;\n"}});
  EXPECT_EQ(CodeOf([&] { LoadCollection(dir / "sub.zip", {}); }), ErrorCode::kAmbiguousLanguage);
}

TEST(Ingest, SingleFileIsInsufficient) {
  TempDir dir;
  WriteText(dir / "only.py", "x = 1\n");
  EXPECT_EQ(CodeOf([&] { LoadCollection(dir.path(), {}); }), ErrorCode::kInsufficientFiles);
}

TEST(Ingest, Errors) {
  TempDir dir;
  EXPECT_EQ(CodeOf([&] { LoadCollection(dir / "missing", {}); }), ErrorCode::kIo);
  EXPECT_EQ(CodeOf([&] { LoadCollection(dir.path(), {}); }), ErrorCode::kEmptyCollection);
  WriteText(dir / "notes.txt", "hello");
  EXPECT_EQ(CodeOf([&] { LoadCollection(dir / "notes.txt", {}); }), ErrorCode::kIo);

  CollectionOptions java;
  java.language = "java";
  WriteText(dir / "a.py", "x = 1\n");
  WriteText(dir / "b.py", "x = 1\n");
  EXPECT_EQ(CodeOf([&] { LoadCollection(dir.path(), java); }), ErrorCode::kEmptyCollection);
}

TEST(Ingest, ExplicitLanguageOverridesVote) {
  CollectionOptions js;
  js.language = "javascript";
  const auto c = testing::CollectionOf(
      {{"a.py", "x = 1"}, {"b.py", "y = 1"}, {"c.js", "a;"}, {"d.js", "b;"}}, js);
  ASSERT_EQ(c.files.size(), 2u);
  EXPECT_EQ(c.files[0].path, "c.js");
}

TEST(Ingest, SkipsHiddenMacosAndEscapingPaths) {
  const auto c = testing::CollectionOf({{"__MACOSX/._a.py", "junk"},
                                        {".git/x.py", "junk"},
                                        {"../evil.py", "junk"},
                                        {"/abs.py", "junk"},
                                        {"s1/main.py", "a = 1"},
                                        {"s2/main.py", "b = 2"}});
  ASSERT_EQ(c.files.size(), 2u);
  EXPECT_EQ(c.files[0].path, "s1/main.py");
  EXPECT_EQ(c.files[1].path, "s2/main.py");
  EXPECT_EQ(c.warnings.size(), 2u);
}

TEST(Ingest, DeterministicIdAssignment) {
  const std::vector<testing::NamedSource> forward = {
      {"z.py", "1"}, {"m/a.py", "2"}, {"b.py", "3"}, {"info.csv", "filename,full_name\nb.py,Bo\n"}};
  auto backward = forward;
  std::reverse(backward.begin(), backward.end());
  const auto a = testing::CollectionOf(forward);
  const auto b = testing::CollectionOf(backward);
  ASSERT_EQ(a.files.size(), b.files.size());
  for (std::size_t i = 0; i < a.files.size(); ++i) {
    EXPECT_EQ(a.files[i].path, b.files[i].path);
    EXPECT_EQ(a.files[i].id, i);
    EXPECT_EQ(a.files[i].author, b.files[i].author);
  }
  EXPECT_EQ(a.files[0].path, "b.py");
  EXPECT_EQ(a.files[0].author, "Bo");
}

std::vector<SourceFile> TwoFiles() {
  std::vector<SourceFile> files(2);
  files[0].path = "a.py";
  files[1].id = 1;
  files[1].path = "b.py";
  return files;
}

TEST(Metadata, HeaderOnlyLeavesFilesUnchanged) {
  const auto r = ParseMetadata("filename,full_name,label,created_at\n", TwoFiles());
  EXPECT_TRUE(r.warnings.empty());
  for (const auto& f : r.files) {
    EXPECT_FALSE(f.author);
    EXPECT_FALSE(f.label);
    EXPECT_FALSE(f.timestamp);
  }
}

TEST(Metadata, UnknownFileIsWarnedAndIgnored) {
  const auto r = ParseMetadata("filename,full_name\nzz.py,Zed\n", TwoFiles());
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("zz.py"), std::string::npos);
  EXPECT_FALSE(r.files[0].author);
}

TEST(Metadata, BadTimestampLeavesFieldEmpty) {
  const auto r = ParseMetadata("filename,created_at\na.py,yesterday\nb.py,2019-10-07 14:31:12 +0200\n",
                               TwoFiles());
  EXPECT_FALSE(r.files[0].timestamp);
  ASSERT_TRUE(r.files[1].timestamp);
  EXPECT_EQ(FormatTimestamp(*r.files[1].timestamp), "2019-10-07T12:31:12Z");
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Metadata, MalformedCsv) {
  EXPECT_EQ(CodeOf([] { ParseMetadata("filename\n\"a.py\n", TwoFiles()); }),
            ErrorCode::kMetadataFormat);
  EXPECT_EQ(CodeOf([] { ParseMetadata("name,label\na.py,x\n", TwoFiles()); }),
            ErrorCode::kMetadataFormat);
}

TEST(Metadata, DuplicateRowLastWins) {
  const auto r = ParseMetadata("filename,full_name\na.py,First\na.py,Second\n", TwoFiles());
  EXPECT_EQ(r.files[0].author, "Second");
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Metadata, QuotedFieldsAndCrlf) {
  const auto r = ParseMetadata("filename,full_name\r\n\"b.py\",\"Doe, \"\"J\"\"\"\r\n", TwoFiles());
  EXPECT_EQ(r.files[1].author, "Doe, \"J\"");
}

TEST(Language, MajorityVote) {
  const std::vector<std::string> paths = {"x.py", "y.py", "z.js"};
  EXPECT_EQ(DetectLanguage(paths), "python");
  const std::vector<std::string> one = {"x.py"};
  EXPECT_EQ(DetectLanguage(one), "python");
  const std::vector<std::string> unknown = {"x.dat"};
  EXPECT_EQ(CodeOf([&] { DetectLanguage(unknown); }), ErrorCode::kUnknownLanguage);
  const std::vector<std::string> tie = {"x.py", "y.js", "readme.md"};
  EXPECT_EQ(CodeOf([&] { DetectLanguage(tie); }), ErrorCode::kAmbiguousLanguage);
}

TEST(Language, ExtensionsOfOneLanguageVoteTogether) {
  const std::vector<std::string> paths = {"a.cc", "b.cpp", "c.c"};
  EXPECT_EQ(DetectLanguage(paths), "cpp");
  EXPECT_EQ(LanguageForPath("Main.JAVA"), "java");
  EXPECT_FALSE(LanguageForPath("Makefile"));
}

TEST(Csv, ParseAndEscape) {
  const auto rows = csv::Parse("\xEF\xBB\xBF" "a,b\n\n\"c,d\",\"e\"\"f\"\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][0], "c,d");
  EXPECT_EQ(rows[1][1], "e\"f");
  EXPECT_EQ(csv::Escape("plain"), "plain");
  EXPECT_EQ(csv::Escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::Escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv::FormatRow({"x", "y,z"}), "x,\"y,z\"\n");
}

TEST(Timestamp, ParseAndFormat) {
  EXPECT_EQ(FormatTimestamp(*ParseTimestamp("2024-01-02")), "2024-01-02T00:00:00Z");
  EXPECT_EQ(FormatTimestamp(*ParseTimestamp("2024-01-02T10:00:00.250+01:00")),
            "2024-01-02T09:00:00.250Z");
  EXPECT_FALSE(ParseTimestamp("2024-13-01"));
  EXPECT_FALSE(ParseTimestamp(""));
}

TEST(Zip, ReadsStoredAndDeflated) {
  const auto bytes = testing::WriteZip({{"a.txt", std::string(5000, 'a')}, {"dir/b.txt", "bee", false}});
  const auto entries = ReadZip(bytes);
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].name, "a.txt");
  EXPECT_EQ(entries[0].data, std::string(5000, 'a'));
  EXPECT_EQ(entries[1].data, "bee");
}

TEST(Zip, LimitsAndCorruption) {
  const auto bytes = testing::WriteZip({{"big.txt", std::string(4096, 'x')}});
  EXPECT_EQ(CodeOf([&] { ReadZip(bytes, {.max_entry_bytes = 1000, .max_total_bytes = 1 << 20}); }),
            ErrorCode::kArchiveLimit);
  EXPECT_EQ(CodeOf([&] { ReadZip(bytes, {.max_entry_bytes = 1 << 20, .max_total_bytes = 1000}); }),
            ErrorCode::kArchiveLimit);

  auto broken = bytes;
  broken.resize(broken.size() - 10);
  EXPECT_EQ(CodeOf([&] { ReadZip(broken); }), ErrorCode::kArchiveFormat);

  auto bad_crc = testing::WriteZip({{"a.txt", "hello", false}});
  bad_crc[30 + 5] = std::byte{'X'};
  EXPECT_EQ(CodeOf([&] { ReadZip(bad_crc); }), ErrorCode::kArchiveFormat);
}

}  // namespace
}  // namespace simtrace
