#pragma once

#include "grassdt/session.hpp"

#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace grassdt {

/// HTTP front end: POST /sessions, GET /sessions/{id}, POST /sessions/{id}/mutate,
/// POST /sessions/{id}/undo, GET /sessions/{id}/word, GET /dtf, GET /gvector.
class SessionServer {
 public:
  explicit SessionServer(SessionStore& store);
  ~SessionServer();

  /// Binds and serves until stop(); returns false if binding fails.
  bool listen(const std::string& host, int port);
  /// Binds to a free port and returns it (or -1); serve with listen_after_bind().
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  SessionStore& store_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace grassdt
