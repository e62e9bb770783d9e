#include "sirenless/server.hpp"

#include "httplib.h"
#include "sirenless/errors.hpp"

namespace sirenless {

using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json";

void send_error(httplib::Response& res, int status, std::string_view code, std::string_view message) {
  res.status = status;
  res.set_content(json{{"error", {{"code", code}, {"message", message}}}}.dump(), kJson);
}

std::string_view code_for_status(int status) {
  switch (status) {
    case 400: return "bad_request";
    case 404: return "not_found";
    case 405: return "method_not_allowed";
    case 413: return "payload_too_large";
    default: return status >= 500 ? "internal" : "http_error";
  }
}

}  // namespace

struct Service::Impl {
  const Analyzer& analyzer;
  AnalysisStore& store;
  ServerOptions options;
  httplib::Server http;

  Impl(const Analyzer& a, AnalysisStore& s, ServerOptions o) : analyzer(a), store(s), options(std::move(o)) {
    http.set_payload_max_length(options.max_body);

    http.Post("/api/analyze", [this](const httplib::Request& req, httplib::Response& res) { analyze(req, res); });
    http.Get("/api/analyses", [this](const httplib::Request&, httplib::Response& res) {
      json list = json::array();
      for (const auto& e : store.list()) {
        list.push_back({{"id", e.id}, {"title", e.title ? json(*e.title) : json(nullptr)}, {"created", e.created}});
      }
      res.set_content(json{{"analyses", list}}.dump(), kJson);
    });
    http.Get(R"(/api/analyses/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      const auto body = store.get(req.matches[1].str());
      if (!body) return send_error(res, 404, "not_found", "no analysis with that id");
      res.set_content(*body, kJson);
    });
    http.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(json{{"status", "ok"}, {"schema_version", kSchemaVersion}}.dump(), kJson);
    });

    if (options.static_dir && !http.set_mount_point("/", options.static_dir->string())) {
      throw IoError("static directory not found: " + options.static_dir->string());
    }

    http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) send_error(res, res.status, code_for_status(res.status), httplib::status_message(res.status));
    });
    http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
      std::string what = "unexpected error";
      try {
        std::rethrow_exception(ep);
      } catch (const std::exception& e) {
        what = e.what();
      } catch (...) {
      }
      send_error(res, 500, "internal", what);
    });
  }

  void analyze(const httplib::Request& req, httplib::Response& res) {
    const json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) return send_error(res, 400, "invalid_json", "request body is not valid JSON");
    if (!body.is_object()) return send_error(res, 400, "invalid_body", "request body must be a JSON object");
    if (!body.contains("text") || !body["text"].is_string()) {
      return send_error(res, 400, "missing_text", "'text' must be a string");
    }
    std::optional<std::string> title;
    if (body.contains("title") && !body["title"].is_null()) {
      if (!body["title"].is_string()) return send_error(res, 400, "invalid_title", "'title' must be a string");
      title = body["title"].get<std::string>();
    }
    for (const auto& [key, _] : body.items()) {
      if (key != "text" && key != "title" && key != "config") {
        return send_error(res, 400, "unknown_field", "unknown field '" + key + "'");
      }
    }

    RunOptions run = analyzer.config().run;
    try {
      if (body.contains("config")) run.merge_json(body["config"]);
    } catch (const ConfigError& e) {
      return send_error(res, 400, "invalid_config", e.what());
    }

    try {
      const AnalysisResult result = analyzer.analyze(body["text"].get<std::string>(), title, run);
      const std::string id = store.put(to_json(result));
      res.status = 201;
      res.set_header("Location", "/api/analyses/" + id);
      res.set_content(json{{"id", id}}.dump(), kJson);
    } catch (const AnalyzeError& e) {
      send_error(res, 400, "empty_text", e.what());
    } catch (const IngestError& e) {
      send_error(res, 400, "invalid_text", e.what());
    } catch (const IoError& e) {
      send_error(res, 500, "storage_error", e.what());
    }
  }
};

Service::Service(const Analyzer& analyzer, AnalysisStore& store, ServerOptions options)
    : impl_(std::make_unique<Impl>(analyzer, store, std::move(options))) {}

Service::~Service() { stop(); }

int Service::bind() {
  auto& o = impl_->options;
  if (o.port == 0) {
    o.port = impl_->http.bind_to_any_port(o.bind);
    if (o.port < 0) throw IoError("cannot bind " + o.bind);
  } else if (!impl_->http.bind_to_port(o.bind, o.port)) {
    throw IoError("cannot bind " + o.bind + ":" + std::to_string(o.port));
  }
  return o.port;
}

void Service::run() { impl_->http.listen_after_bind(); }

void Service::stop() {
  if (impl_) impl_->http.stop();
}

void Service::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace sirenless
