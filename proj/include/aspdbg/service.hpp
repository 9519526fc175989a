#pragma once

// Session store behind the HTTP/JSON API. Handlers are plain functions of
// (path parameters, body) -> (status, JSON) so they can be tested without a
// socket; serve() wires them to an HTTP server.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "aspdbg/explainer.hpp"
#include "aspdbg/semantics.hpp"

namespace aspdbg {

struct Response {
  int status = 200;
  nlohmann::json body;
};

struct ServiceOptions {
  /// Directory for saved interpretations; empty disables persistence.
  std::filesystem::path store_dir;
  /// Static files served at /; empty serves the built-in page.
  std::filesystem::path static_dir;
  SolveOptions solve;
  ExplainOptions explain;
};

class Service {
 public:
  explicit Service(ServiceOptions options = {});

  Response create_session(const nlohmann::json& body);
  Response get_session(const std::string& id);
  Response put_interpretation(const std::string& id, const nlohmann::json& body);
  Response explain(const std::string& id, const nlohmann::json& body);
  Response answer_sets(const std::string& id, std::size_t limit);
  Response save_interpretation(const std::string& id, const std::string& name);
  Response load_interpretation(const std::string& id, const std::string& name);
  Response list_saved() const;
  Response health() const;

  const ServiceOptions& options() const noexcept { return options_; }

 private:
  struct Session {
    std::mutex mutex;
    std::string program_text;
    Program program;
    std::optional<Interpretation> interpretation;
    std::optional<nlohmann::json> explanation;
    bool stale = true;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  std::string new_id();

  ServiceOptions options_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
  std::uint64_t seed_ = 0;
};

/// Error payload for an exception thrown by the engine.
Response error_response(const std::exception& e);

/// HTTP front end for a Service.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace aspdbg
