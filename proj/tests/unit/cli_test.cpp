#include <gtest/gtest.h>

#include <httplib.h>
#include <json.hpp>

#include <sstream>
#include <thread>

#include "cli.hpp"
#include "helpers.hpp"
#include "zip_writer.hpp"

namespace simtrace::cli {
namespace {

using testing::TempDir;
using testing::WriteText;

const std::string kProgram =
    "def mean(values):\n"
    "    total = 0\n"
    "    for v in values:\n"
    "        total += v\n"
    "    return total / len(values)\n"
    "\n"
    "def spread(values):\n"
    "    m = mean(values)\n"
    "    return max(values) - min(values), m\n";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "simtrace");
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, IdenticalZipTerminal) {
  TempDir dir;
  testing::WriteZipFile(dir / "identical.zip", {{"a.py", kProgram}, {"b.py", kProgram}});
  const auto r = RunCli({"run", (dir / "identical.zip").string(), "--format", "terminal"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1.00"), std::string::npos);
  EXPECT_NE(r.out.find("Pairs:              1"), std::string::npos);
}

TEST(Cli, SingleFileIsAnAnalysisError) {
  TempDir dir;
  WriteText(dir / "single/only.py", kProgram);
  const auto r = RunCli({"run", (dir / "single").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("at least 2 files"), std::string::npos);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, 1);
  EXPECT_EQ(RunCli({"run"}).code, 1);
  EXPECT_EQ(RunCli({"bogus"}).code, 1);
  EXPECT_EQ(RunCli({"run", ".", "--format", "xml"}).code, 1);
  EXPECT_EQ(RunCli({"run", ".", "--similarity-threshold", "high"}).code, 1);
  EXPECT_EQ(RunCli({"run", ".", "--kgram-length", "0"}).code, 1);
  const auto help = RunCli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("run"), std::string::npos);
  EXPECT_EQ(RunCli({"run", "--help"}).code, 0);
}

TEST(Cli, WritesJsonAndCsv) {
  TempDir dir;
  WriteText(dir / "in/a.py", kProgram);
  WriteText(dir / "in/b.py", kProgram + "print(spread([1, 2]))\n");
  WriteText(dir / "in/c.py", "import sys\nprint(sys.argv)\n");
  const auto out = (dir / "out").string();
  const auto r = RunCli({"run", (dir / "in").string(), "-f", "json", "-f", "csv", "-o", out,
                         "--include-fragments", "--similarity-threshold", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(testing::ReadText(dir / "out/report.json"));
  EXPECT_EQ(doc["files"].size(), 3u);
  EXPECT_TRUE(doc["pairs"][0].contains("fragments"));
  EXPECT_EQ(doc["threshold"], 0.5);
  EXPECT_TRUE(std::filesystem::exists(dir / "out/pairs.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "out/files.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "out/clusters.csv"));
  EXPECT_EQ(r.out.find("Threshold:"), std::string::npos);
}

TEST(Cli, WarningsGoToErrorStream) {
  TempDir dir;
  WriteText(dir / "in/a.py", kProgram);
  WriteText(dir / "in/b.py", kProgram);
  WriteText(dir / "in/readme.js", "x;");
  const auto r = RunCli({"run", (dir / "in").string(), "--anonymize-output"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning: excluded 'readme.js'"), std::string::npos);
  EXPECT_EQ(r.out.find("a.py"), std::string::npos);
}

std::filesystem::path MakeReport(const TempDir& dir) {
  WriteText(dir / "report.json", "{\"formatVersion\": 1}\n");
  return dir / "report.json";
}

TEST(Serve, Endpoints) {
  TempDir dir;
  ReportServer server({MakeReport(dir), "127.0.0.1", 0, std::nullopt});
  ASSERT_TRUE(server.Bind());
  std::thread listener([&] { server.Listen(); });

  httplib::Client client("127.0.0.1", server.port());
  auto report = client.Get("/report.json");
  ASSERT_TRUE(report);
  EXPECT_EQ(report->status, 200);
  EXPECT_EQ(report->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(report->body, "{\"formatVersion\": 1}\n");

  auto index = client.Get("/");
  ASSERT_TRUE(index);
  EXPECT_EQ(index->status, 200);
  EXPECT_NE(index->body.find("report.json"), std::string::npos);

  auto missing = client.Get("/missing");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  server.Stop();
  listener.join();
}

TEST(Serve, DashboardAssets) {
  TempDir dir;
  WriteText(dir / "dist/index.html", "<html>dashboard</html>");
  WriteText(dir / "dist/app.js", "console.log(1)");
  ReportServer server({MakeReport(dir), "127.0.0.1", 0, dir / "dist"});
  ASSERT_TRUE(server.Bind());
  std::thread listener([&] { server.Listen(); });
  httplib::Client client("127.0.0.1", server.port());
  EXPECT_EQ(client.Get("/")->body, "<html>dashboard</html>");
  EXPECT_EQ(client.Get("/app.js")->body, "console.log(1)");
  EXPECT_EQ(client.Get("/nope.js")->status, 404);
  server.Stop();
  listener.join();
}

TEST(Serve, BusyPort) {
  TempDir dir;
  ReportServer first({MakeReport(dir), "127.0.0.1", 0, std::nullopt});
  ASSERT_TRUE(first.Bind());
  std::ostringstream out, err;
  const int code = Serve({dir / "report.json", "127.0.0.1", first.port(), std::nullopt}, out, err);
  EXPECT_EQ(code, 2);
  EXPECT_NE(err.str().find("cannot bind"), std::string::npos);
}

TEST(Serve, MissingReport) {
  TempDir dir;
  const auto r = RunCli({"serve", (dir / "none.json").string()});
  EXPECT_EQ(r.code, 1);
}

}  // namespace
}  // namespace simtrace::cli
