#include "cli.hpp"

#include <httplib.h>
#include <fmt/format.h>

#include <csignal>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <pthread.h>

namespace simtrace::cli {
namespace {

constexpr std::string_view kEntryPage = R"(<!doctype html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>simtrace report</title>
<style>
body { font-family: system-ui, sans-serif; margin: 2rem; }
table { border-collapse: collapse; }
td, th { padding: 0.2rem 0.8rem; text-align: left; border-bottom: 1px solid #ddd; }
</style>
</head>
<body>
<h1>simtrace report</h1>
<p id="summary">Loading report.json...</p>
<table id="pairs"><thead><tr><th>Left</th><th>Right</th><th>Similarity</th><th>Longest</th></tr></thead><tbody></tbody></table>
<script>
fetch("/report.json").then(r => r.json()).then(report => {
  const name = Object.fromEntries(report.files.map(f => [f.id, f.path]));
  const o = report.overview;
  document.getElementById("summary").textContent =
    `${o.fileCount} files, ${o.pairCount} pairs, highest similarity ${o.highestSimilarity.toFixed(3)}, threshold ${report.threshold.toFixed(2)}`;
  const body = document.querySelector("#pairs tbody");
  for (const p of report.pairs.slice(0, 100)) {
    const row = body.insertRow();
    for (const v of [name[p.leftId], name[p.rightId], p.similarity.toFixed(3), p.longestFragment]) {
      row.insertCell().textContent = v;
    }
  }
});
</script>
</body>
</html>
)";

std::optional<std::string> Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

}  // namespace

struct ReportServer::Impl {
  httplib::Server server;
};

ReportServer::ReportServer(ServeOptions options)
    : impl_(std::make_unique<Impl>()), options_(std::move(options)) {
  auto& server = impl_->server;
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  const auto report = options_.report;
  const auto dashboard = options_.dashboard_dir;

  server.Get("/report.json", [report](const httplib::Request&, httplib::Response& res) {
    if (auto body = Slurp(report)) {
      res.set_header("Cache-Control", "no-store");
      res.set_content(std::move(*body), "application/json");
    } else {
      res.status = 404;
      res.set_content("report not found\n", "text/plain");
    }
  });
  server.Get("/", [dashboard](const httplib::Request&, httplib::Response& res) {
    if (dashboard) {
      if (auto body = Slurp(*dashboard / "index.html")) {
        res.set_content(std::move(*body), "text/html; charset=utf-8");
        return;
      }
    }
    res.set_content(std::string(kEntryPage), "text/html; charset=utf-8");
  });
  if (dashboard) server.set_mount_point("/", dashboard->string());
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) res.set_content("not found\n", "text/plain");
  });
}

ReportServer::~ReportServer() { Stop(); }

bool ReportServer::Bind() {
  auto& server = impl_->server;
  if (options_.port == 0) {
    const int port = server.bind_to_any_port(options_.host);
    if (port < 0) return false;
    port_ = static_cast<std::uint16_t>(port);
    return true;
  }
  if (!server.bind_to_port(options_.host, options_.port)) return false;
  port_ = options_.port;
  return true;
}

void ReportServer::Listen() { impl_->server.listen_after_bind(); }

void ReportServer::Stop() {
  if (impl_) impl_->server.stop();
}

int Serve(const ServeOptions& options, std::ostream& out, std::ostream& err) {
  if (!std::filesystem::is_regular_file(options.report)) {
    err << "error: report '" << options.report.string() << "' not found\n";
    return kExitAnalysis;
  }
  ReportServer server(options);
  if (!server.Bind()) {
    err << fmt::format("error: cannot bind {}:{} (port in use?)\n", options.host, options.port);
    return kExitAnalysis;
  }

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &signals, &previous);

  std::thread listener([&server] { server.Listen(); });
  out << fmt::format("Serving {} at http://{}:{}/ (Ctrl-C to stop)\n", options.report.string(),
                     options.host, server.port())
      << std::flush;

  int received = 0;
  sigwait(&signals, &received);
  server.Stop();
  listener.join();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
  out << "Stopped\n";
  return kExitOk;
}

}  // namespace simtrace::cli
