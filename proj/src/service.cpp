#include "aspdbg/service.hpp"

#include <httplib.h>

#include <fstream>
#include <random>
#include <sstream>

#include "aspdbg/parser.hpp"
#include "aspdbg/report.hpp"

namespace aspdbg {

using nlohmann::json;

namespace {

Response error(int status, const std::string& kind, const std::string& message) {
  return {status, {{"error", kind}, {"message", message}}};
}

json rules_json(const Program& program) {
  json rules = json::array();
  for (std::size_t i = 0; i < program.size(); ++i) {
    const auto& r = program[i];
    rules.push_back({{"index", i + 1},
                     {"text", r.str()},
                     {"span", {{"begin", r.span().begin}, {"end", r.span().end}}}});
  }
  return rules;
}

bool valid_name(const std::string& name) {
  if (name.empty() || name.size() > 64) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

const char* kIndexPage = R"html(<!doctype html>
<html><head><meta charset="utf-8"><title>debug-asp</title></head>
<body>
<h1>debug-asp</h1>
<p>The JSON API is available under <code>/sessions</code>. Start the server with
<code>--static-dir</code> to serve the workbench.</p>
</body></html>
)html";

}  // namespace

Response error_response(const std::exception& e) {
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) return {400, to_json(*pe)};
  if (const auto* ae = dynamic_cast<const Error*>(&e)) {
    int status = 400;
    switch (ae->kind()) {
      case ErrorKind::BudgetExceeded: status = 409; break;
      case ErrorKind::SolverFailure:
      case ErrorKind::SolverNotConfigured:
      case ErrorKind::Io: status = 500; break;
      default: break;
    }
    return error(status, std::string(kind_name(ae->kind())), ae->what());
  }
  return error(500, "internal", e.what());
}

Service::Service(ServiceOptions options) : options_(std::move(options)) {
  seed_ = std::random_device{}();
}

std::string Service::new_id() {
  std::mt19937_64 gen(seed_ ^ (++counter_ * 0x9E3779B97F4A7C15ULL));
  std::ostringstream os;
  os << std::hex << gen();
  return os.str();
}

std::shared_ptr<Service::Session> Service::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response Service::create_session(const json& body) {
  if (!body.is_object() || !body.contains("program_text") || !body["program_text"].is_string()) {
    return error(400, "syntax", "expected {\"program_text\": string}");
  }
  try {
    auto text = body["program_text"].get<std::string>();
    auto parsed = parse_program_with_warnings(text);
    auto session = std::make_shared<Session>();
    session->program_text = text;
    session->program = std::move(parsed.program);
    json warnings = json::array();
    for (const auto& w : parsed.warnings) warnings.push_back(to_json(w));
    std::string id;
    {
      std::lock_guard lock(mutex_);
      do {
        id = new_id();
      } while (sessions_.count(id));
      sessions_[id] = session;
    }
    return {201, {{"id", id}, {"rules", rules_json(session->program)}, {"warnings", warnings}}};
  } catch (const std::exception& e) {
    return error_response(e);
  }
}

Response Service::get_session(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  std::lock_guard lock(s->mutex);
  json out = {{"id", id},
              {"program_text", s->program_text},
              {"rules", rules_json(s->program)},
              {"interpretation", s->interpretation ? to_json(*s->interpretation) : json(nullptr)},
              {"explanation", s->explanation ? *s->explanation : json(nullptr)},
              {"stale", s->stale}};
  return {200, out};
}

Response Service::put_interpretation(const std::string& id, const json& body) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  std::string text;
  if (body.is_object() && body.contains("literals") && body["literals"].is_array()) {
    text = "{";
    bool sep = false;
    for (const auto& l : body["literals"]) {
      if (!l.is_string()) return error(400, "syntax", "literals must be strings");
      text += (sep ? ", " : " ") + l.get<std::string>();
      sep = true;
    }
    text += " }";
  } else if (body.is_object() && body.contains("text") && body["text"].is_string()) {
    text = body["text"].get<std::string>();
  } else {
    return error(400, "syntax", "expected {\"literals\": [string]} or {\"text\": string}");
  }
  try {
    Interpretation i = parse_interpretation(text);
    std::lock_guard lock(s->mutex);
    s->interpretation = i;
    s->stale = true;
    return {200, {{"valid", true}, {"literals", to_json(i)}}};
  } catch (const std::exception& e) {
    return error_response(e);
  }
}

Response Service::explain(const std::string& id, const json& body) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  std::lock_guard lock(s->mutex);
  if (!s->interpretation) return error(400, "no-interpretation", "PUT an interpretation first");
  ExplainOptions opts = options_.explain;
  if (body.is_object()) {
    if (body.contains("minimal_loops")) opts.minimal_loops = body["minimal_loops"].get<bool>();
    if (body.contains("first")) opts.first = body["first"].get<bool>();
  }
  try {
    json out = to_json(aspdbg::explain(s->program, *s->interpretation, opts), s->program);
    s->explanation = out;
    s->stale = false;
    return {200, out};
  } catch (const std::exception& e) {
    return error_response(e);
  }
}

Response Service::answer_sets(const std::string& id, std::size_t limit) {
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  std::lock_guard lock(s->mutex);
  try {
    json sets = json::array();
    for (const auto& a : enumerate_answer_sets(s->program, limit, options_.solve)) {
      sets.push_back(to_json(a));
    }
    return {200, {{"answer_sets", sets}}};
  } catch (const std::exception& e) {
    return error_response(e);
  }
}

Response Service::save_interpretation(const std::string& id, const std::string& name) {
  if (options_.store_dir.empty()) return error(400, "io", "persistence is disabled");
  if (!valid_name(name)) return error(400, "syntax", "invalid name " + name);
  auto s = find(id);
  if (!s) return error(404, "unknown-session", "no session " + id);
  std::lock_guard lock(s->mutex);
  if (!s->interpretation) return error(400, "no-interpretation", "nothing to save");
  std::filesystem::create_directories(options_.store_dir);
  std::ofstream f(options_.store_dir / (name + ".int"));
  for (const auto& l : s->interpretation->literals()) f << l.str() << ".\n";
  if (!f) return error(500, "io", "cannot write " + name);
  return {200, {{"saved", name}}};
}

Response Service::load_interpretation(const std::string& id, const std::string& name) {
  if (options_.store_dir.empty()) return error(400, "io", "persistence is disabled");
  if (!valid_name(name)) return error(400, "syntax", "invalid name " + name);
  std::ifstream f(options_.store_dir / (name + ".int"));
  if (!f) return error(404, "io", "no saved interpretation " + name);
  std::stringstream text;
  text << f.rdbuf();
  return put_interpretation(id, {{"text", text.str()}});
}

Response Service::list_saved() const {
  json names = json::array();
  if (!options_.store_dir.empty() && std::filesystem::is_directory(options_.store_dir)) {
    std::vector<std::string> found;
    for (const auto& e : std::filesystem::directory_iterator(options_.store_dir)) {
      if (e.path().extension() == ".int") found.push_back(e.path().stem().string());
    }
    std::sort(found.begin(), found.end());
    for (auto& n : found) names.push_back(n);
  }
  return {200, {{"saved", names}}};
}

Response Service::health() const { return {200, {{"status", "ok"}}}; }

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;
};

HttpServer::HttpServer(Service& service) : impl_(new Impl{service, {}}) {
  auto& srv = impl_->server;
  auto& svc = impl_->service;
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto body_of = [](const httplib::Request& req, json& out) {
    if (req.body.empty()) {
      out = json::object();
      return true;
    }
    out = json::parse(req.body, nullptr, false);
    return !out.is_discarded();
  };
  auto bad_json = [&reply](httplib::Response& res) {
    reply(res, {400, {{"error", "syntax"}, {"message", "request body is not JSON"}}});
  };

  srv.Get("/health", [&svc, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, svc.health());
  });
  srv.Post("/sessions", [&svc, reply, body_of, bad_json](const httplib::Request& req,
                                                          httplib::Response& res) {
    json body;
    if (!body_of(req, body)) return bad_json(res);
    reply(res, svc.create_session(body));
  });
  srv.Get(R"(/sessions/([0-9a-f]+))", [&svc, reply](const httplib::Request& req,
                                                    httplib::Response& res) {
    reply(res, svc.get_session(req.matches[1]));
  });
  srv.Put(R"(/sessions/([0-9a-f]+)/interpretation)",
          [&svc, reply, body_of, bad_json](const httplib::Request& req, httplib::Response& res) {
            json body;
            if (!body_of(req, body)) return bad_json(res);
            reply(res, svc.put_interpretation(req.matches[1], body));
          });
  srv.Post(R"(/sessions/([0-9a-f]+)/explain)",
           [&svc, reply, body_of, bad_json](const httplib::Request& req, httplib::Response& res) {
             json body;
             if (!body_of(req, body)) return bad_json(res);
             reply(res, svc.explain(req.matches[1], body));
           });
  srv.Get(R"(/sessions/([0-9a-f]+)/answer-sets)",
          [&svc, reply](const httplib::Request& req, httplib::Response& res) {
            std::size_t limit = 0;
            if (req.has_param("limit")) {
              try {
                limit = std::stoul(req.get_param_value("limit"));
              } catch (const std::exception&) {
                return reply(res, {400, {{"error", "syntax"}, {"message", "bad limit"}}});
              }
            }
            reply(res, svc.answer_sets(req.matches[1], limit));
          });
  srv.Put(R"(/sessions/([0-9a-f]+)/saved/([A-Za-z0-9_-]+))",
          [&svc, reply](const httplib::Request& req, httplib::Response& res) {
            reply(res, svc.save_interpretation(req.matches[1], req.matches[2]));
          });
  srv.Post(R"(/sessions/([0-9a-f]+)/saved/([A-Za-z0-9_-]+)/load)",
           [&svc, reply](const httplib::Request& req, httplib::Response& res) {
             reply(res, svc.load_interpretation(req.matches[1], req.matches[2]));
           });
  srv.Get("/saved", [&svc, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, svc.list_saved());
  });

  if (!svc.options().static_dir.empty()) {
    srv.set_mount_point("/", svc.options().static_dir.string());
  } else {
    srv.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kIndexPage, "text/html");
    });
  }
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace aspdbg
