#pragma once

// In-memory mutation sessions behind the JSON/HTTP API.

#include "grassdt/tracking.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace grassdt {

/// Error with the HTTP status it maps to (400, 404 or 409).
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

class SessionStore {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  explicit SessionStore(std::chrono::seconds ttl = std::chrono::hours(1), Clock clock = {});

  /// Request: {"k": 4, "n": 9} for the mutable grid of Gr(k, n) (add
  /// "with_frozen": true for the full triangular seed), or {"quiver": {...}}.
  /// Optional "track_f" overrides the default (on iff r <= 12).
  nlohmann::json create(const nlohmann::json& request);
  nlohmann::json state(const std::string& id);
  nlohmann::json mutate(const std::string& id, int vertex);
  /// Pops one state; "undone" is false when there was nothing to undo.
  nlohmann::json undo(const std::string& id);
  std::vector<int> word(const std::string& id);

  /// Drops sessions idle for longer than the TTL; returns how many.
  std::size_t evict_expired();
  std::size_t size() const;

 private:
  struct Session {
    std::mutex mutex;
    std::string id;
    nlohmann::json preset;
    nlohmann::json labels;  // per-vertex display data, null for custom quivers
    std::vector<TrackedSeed> stack;  // stack.front() is the initial seed
    std::chrono::steady_clock::time_point last_access;
  };

  std::shared_ptr<Session> find(const std::string& id);
  static nlohmann::json payload(const Session& s);

  std::chrono::seconds ttl_;
  Clock clock_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 rng_;
  unsigned long long counter_ = 0;
};

/// Stateless helpers shared by the HTTP routes and the CLI.
nlohmann::json dtf_report(int k, int n, int p, int q);
nlohmann::json gvector_report(int k, int n, const std::string& index);

}  // namespace grassdt
