#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "sirenless/analysis.hpp"
#include "sirenless/store.hpp"

namespace sirenless {

struct ServerOptions {
  std::string bind = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::optional<std::filesystem::path> static_dir;
  std::size_t max_body = 1 << 20;
};

/// JSON-over-HTTP front end for the analyzer and the store.
///
///   POST /api/analyze        {text, title?, config?} -> 201 {id}
///   GET  /api/analyses       -> 200 {analyses: [{id, title, created}]}
///   GET  /api/analyses/{id}  -> 200 stored analysis, or 404
///   GET  /api/health         -> 200 {status: "ok"}
///
/// Errors carry {"error": {"code", "message"}}.
class Service {
 public:
  Service(const Analyzer& analyzer, AnalysisStore& store, ServerOptions options = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds the socket and returns the port actually bound. Throws IoError
  /// when binding fails.
  int bind();
  /// Serves until stop(); blocks. Call bind() first.
  void run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sirenless
