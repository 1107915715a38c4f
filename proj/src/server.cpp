#include "grassdt/server.hpp"

#include <httplib.h>

namespace grassdt {

using nlohmann::json;

namespace {

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

// Runs `body`, mapping exceptions to JSON errors with a status code.
template <class F>
void guarded(httplib::Response& res, F&& body) {
  try {
    body();
  } catch (const ServiceError& e) {
    send(res, e.status(), {{"error", e.what()}});
  } catch (const json::exception& e) {
    send(res, 400, {{"error", std::string("bad JSON: ") + e.what()}});
  } catch (const std::invalid_argument& e) {
    send(res, 400, {{"error", e.what()}});
  } catch (const std::out_of_range& e) {
    send(res, 400, {{"error", e.what()}});
  } catch (const std::length_error& e) {
    send(res, 400, {{"error", e.what()}});
  } catch (const std::exception& e) {
    send(res, 500, {{"error", e.what()}});
  }
}

int int_param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) throw ServiceError(400, std::string("missing query parameter '") + name + "'");
  const std::string v = req.get_param_value(name);
  std::size_t used = 0;
  int out = 0;
  try {
    out = std::stoi(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) throw ServiceError(400, std::string("query parameter '") + name + "' must be an integer");
  return out;
}

json body_json(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  return json::parse(req.body);
}

}  // namespace

SessionServer::SessionServer(SessionStore& store) : store_(store), server_(std::make_unique<httplib::Server>()) {
  auto& svr = *server_;
  svr.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send(res, 201, store_.create(body_json(req))); });
  });
  svr.Get(R"(/sessions/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send(res, 200, store_.state(req.matches[1])); });
  });
  svr.Post(R"(/sessions/([^/]+)/mutate)", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const json body = body_json(req);
      if (!body.contains("vertex") || !body["vertex"].is_number_integer())
        throw ServiceError(400, "expected integer 'vertex'");
      send(res, 200, store_.mutate(req.matches[1], body["vertex"].get<int>()));
    });
  });
  svr.Post(R"(/sessions/([^/]+)/undo)", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send(res, 200, store_.undo(req.matches[1])); });
  });
  svr.Get(R"(/sessions/([^/]+)/word)", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { send(res, 200, {{"word", store_.word(req.matches[1])}}); });
  });
  svr.Get("/dtf", [](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      send(res, 200, dtf_report(int_param(req, "k"), int_param(req, "n"), int_param(req, "p"), int_param(req, "q")));
    });
  });
  svr.Get("/gvector", [](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      if (!req.has_param("index")) throw ServiceError(400, "missing query parameter 'index'");
      send(res, 200, gvector_report(int_param(req, "k"), int_param(req, "n"), req.get_param_value("index")));
    });
  });
}

SessionServer::~SessionServer() { stop(); }

bool SessionServer::listen(const std::string& host, int port) { return server_->listen(host, port); }
int SessionServer::bind_to_any_port(const std::string& host) { return server_->bind_to_any_port(host); }
bool SessionServer::listen_after_bind() { return server_->listen_after_bind(); }
void SessionServer::stop() {
  if (server_->is_running()) server_->stop();
}
void SessionServer::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace grassdt
