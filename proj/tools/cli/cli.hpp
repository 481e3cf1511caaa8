#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace simtrace::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitAnalysis = 2,
};

// Entry point behind the `simtrace` binary. args[0] is the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ServeOptions {
  std::filesystem::path report;
  std::string host = "127.0.0.1";
  std::uint16_t port = 3000;
  // Built dashboard assets; an embedded entry page is used when empty.
  std::optional<std::filesystem::path> dashboard_dir;
};

// Read-only HTTP server for a report and the dashboard assets:
//   GET /report.json  the report document
//   GET /             dashboard entry page
// Anything else is looked up in the dashboard directory, else 404.
class ReportServer {
 public:
  explicit ReportServer(ServeOptions options);
  ~ReportServer();

  ReportServer(const ReportServer&) = delete;
  ReportServer& operator=(const ReportServer&) = delete;

  // Binds the socket; false when the port is taken. Port 0 picks a free one.
  bool Bind();
  std::uint16_t port() const { return port_; }

  // Blocks until Stop().
  void Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  ServeOptions options_;
  std::uint16_t port_ = 0;
};

// Serves until SIGINT/SIGTERM. Returns an exit code.
int Serve(const ServeOptions& options, std::ostream& out, std::ostream& err);

}  // namespace simtrace::cli
