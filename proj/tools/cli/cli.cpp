#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

#include "simtrace/error.hpp"
#include "simtrace/report.hpp"
#include "simtrace/report_io.hpp"

namespace simtrace::cli {
namespace fs = std::filesystem;
namespace {

struct RunArgs {
  std::string input;
  std::string language = "auto";
  std::size_t kgram_length = kDefaultKgramLength;
  std::size_t window_length = kDefaultWindowLength;
  std::size_t min_fragment_length = kDefaultMinFragmentLength;
  std::string threshold = "auto";
  std::vector<std::string> formats;
  std::string output = "simtrace-report";
  bool include_fragments = false;
  bool anonymize = false;
  bool mask_numbers = false;
  unsigned threads = 0;
  bool serve = false;
  std::uint16_t port = 3000;
  std::string dashboard_dir;
};

std::optional<double> ParseThreshold(const std::string& text) {
  if (text == "auto") return std::nullopt;
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0.0 || value > 1.0) {
    throw CLI::ValidationError("--similarity-threshold", "expected a number in [0,1] or 'auto'");
  }
  return value;
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
}

int ExecuteRun(const RunArgs& args, std::ostream& out, std::ostream& err) {
  CollectionOptions options;
  options.language = args.language;
  options.kgram_length = args.kgram_length;
  options.window_length = args.window_length;
  options.min_fragment_length = args.min_fragment_length;
  options.similarity_threshold = ParseThreshold(args.threshold);
  options.mask_numbers = args.mask_numbers;
  options.threads = args.threads;

  const Report report = AnalyzePath(args.input, options);
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';

  auto wants = [&](std::string_view f) {
    return std::find(args.formats.begin(), args.formats.end(), f) != args.formats.end();
  };
  const bool terminal = args.formats.empty() || wants("terminal");
  const fs::path output(args.output);

  if (terminal) {
    out << FormatTerminal(report, {.anonymize = args.anonymize});
  }
  if (wants("csv")) {
    WriteCsv(report, output, args.anonymize);
    out << "Wrote " << (output / "files.csv").string() << ", pairs.csv, clusters.csv\n";
  }
  if (wants("json") || args.serve) {
    std::error_code ec;
    fs::create_directories(output, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create '" + output.string() + "': " + ec.message());
    WriteFile(output / "report.json",
              ToJson(report, {.include_fragments = args.include_fragments || args.serve,
                              .anonymize = args.anonymize}));
    out << "Wrote " << (output / "report.json").string() << '\n';
  }
  if (args.serve) {
    ServeOptions serve{output / "report.json", "127.0.0.1", args.port, std::nullopt};
    if (!args.dashboard_dir.empty()) serve.dashboard_dir = args.dashboard_dir;
    return Serve(serve, out, err);
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Source code similarity analysis for programming assignments", "simtrace"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Analyse a directory or ZIP archive of submissions");
  run_cmd->add_option("input", run.input, "Directory or ZIP archive")->required();
  run_cmd->add_option("-l,--language", run.language, "Language identifier or 'auto'")
      ->capture_default_str();
  run_cmd->add_option("-k,--kgram-length", run.kgram_length, "Tokens per k-gram")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("-w,--window-length", run.window_length, "Winnowing window size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("--min-fragment-length", run.min_fragment_length,
                      "Minimum fingerprints per shared fragment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("-t,--similarity-threshold", run.threshold, "Number in [0,1] or 'auto'")
      ->capture_default_str();
  run_cmd->add_option("-f,--format", run.formats, "terminal, csv or json (repeatable)")
      ->check(CLI::IsMember({"terminal", "csv", "json"}))
      ->take_all();
  run_cmd->add_option("-o,--output", run.output, "Output directory for csv/json")
      ->capture_default_str();
  run_cmd->add_flag("--include-fragments", run.include_fragments,
                    "Include shared fragments and diffs in report.json");
  run_cmd->add_flag("--anonymize-output", run.anonymize,
                    "Replace paths and authors with pseudonyms");
  run_cmd->add_flag("--mask-numbers", run.mask_numbers, "Mask numeric literals as well");
  run_cmd->add_option("--threads", run.threads, "Worker threads (0 = all cores)");
  run_cmd->add_flag("--serve", run.serve, "Serve the report to the dashboard afterwards");
  run_cmd->add_option("-p,--port", run.port, "Port for --serve")->capture_default_str();
  run_cmd->add_option("--dashboard-dir", run.dashboard_dir, "Built dashboard assets");

  ServeOptions serve;
  std::string serve_dashboard;
  auto* serve_cmd = app.add_subcommand("serve", "Serve an existing report.json to the dashboard");
  serve_cmd->add_option("report", serve.report, "Path to report.json")
      ->required()
      ->check(CLI::ExistingFile);
  serve_cmd->add_option("-p,--port", serve.port, "Port")->capture_default_str();
  serve_cmd->add_option("--host", serve.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--dashboard-dir", serve_dashboard, "Built dashboard assets");

  std::vector<std::string> args(raw_args.size() > 1 ? raw_args.begin() + 1 : raw_args.end(),
                                raw_args.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
    ParseThreshold(run.threshold);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return ExecuteRun(run, out, err);
    if (!serve_dashboard.empty()) serve.dashboard_dir = serve_dashboard;
    return Serve(serve, out, err);
  } catch (const Error& e) {
    err << "error: " << ToString(e.code()) << ": " << e.what() << '\n';
    return kExitAnalysis;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAnalysis;
  }
}

}  // namespace simtrace::cli
