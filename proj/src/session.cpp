#include "grassdt/session.hpp"

#include "grassdt/dt.hpp"
#include "grassdt/grassmann.hpp"

#include <sstream>

namespace grassdt {

using nlohmann::json;

SessionStore::SessionStore(std::chrono::seconds ttl, Clock clock)
    : ttl_(ttl), clock_(clock ? std::move(clock) : Clock([] { return std::chrono::steady_clock::now(); })),
      rng_(std::random_device{}()) {}

namespace {

constexpr int kMaxPresetN = 30;
constexpr int kDefaultTrackLimit = 12;

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw ServiceError(400, std::string("expected integer '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

json SessionStore::create(const json& request) {
  if (!request.is_object()) throw ServiceError(400, "request must be a JSON object");
  auto s = std::make_shared<Session>();
  IceQuiver q;
  if (request.contains("quiver")) {
    try {
      q = quiver_from_json(request["quiver"]);
    } catch (const std::exception& e) {
      throw ServiceError(400, std::string("invalid quiver: ") + e.what());
    }
    s->preset = {{"custom", true}};
  } else {
    const int k = get_int(request, "k"), n = get_int(request, "n");
    if (k < 2 || n - k < 2) throw ServiceError(400, "preset needs 2 <= k <= n-2");
    if (n > kMaxPresetN) throw ServiceError(400, "preset too large");
    const bool frozen = request.value("with_frozen", false);
    TriangularSeed seed(k, n);
    q = frozen ? seed.quiver() : seed.grid_quiver();
    s->preset = {{"k", k}, {"n", n}, {"with_frozen", frozen}};
    s->labels = json::array();
    for (int v = 1; v <= q.num_vertices(); ++v)
      s->labels.push_back({{"vertex", seed.vertex(v).str()}, {"plucker", seed.label(v).str()}});
  }
  bool track_f = q.num_mutable() <= kDefaultTrackLimit;
  if (request.contains("track_f")) {
    if (!request["track_f"].is_boolean()) throw ServiceError(400, "'track_f' must be a boolean");
    track_f = request["track_f"].get<bool>();
  }
  s->stack.push_back(initial_tracked(q, track_f));

  evict_expired();
  std::lock_guard lock(mutex_);
  std::ostringstream id;
  id << "s" << ++counter_ << "-" << std::hex << (rng_() & 0xffffffffffull);
  s->id = id.str();
  s->last_access = clock_();
  sessions_.emplace(s->id, s);
  return payload(*s);
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) {
  evict_expired();
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "no such session: " + id);
  return it->second;
}

json SessionStore::state(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  s->last_access = clock_();
  return payload(*s);
}

json SessionStore::mutate(const std::string& id, int vertex) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  s->last_access = clock_();
  const TrackedSeed& cur = s->stack.back();
  if (vertex < 1 || vertex > cur.num_vertices()) throw ServiceError(400, "vertex out of range: " + std::to_string(vertex));
  if (cur.quiver.is_frozen(vertex)) throw ServiceError(409, "vertex is frozen: " + std::to_string(vertex));
  s->stack.push_back(mutate_tracked(cur, vertex));
  return payload(*s);
}

json SessionStore::undo(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  s->last_access = clock_();
  const bool undone = s->stack.size() > 1;
  if (undone) s->stack.pop_back();
  json out = payload(*s);
  out["undone"] = undone;
  return out;
}

std::vector<int> SessionStore::word(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  s->last_access = clock_();
  return s->stack.back().history;
}

std::size_t SessionStore::evict_expired() {
  const auto now = clock_();
  std::lock_guard lock(mutex_);
  std::size_t dropped = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    // A session busy in another request is never evicted under it.
    std::unique_lock busy(it->second->mutex, std::try_to_lock);
    if (busy.owns_lock() && now - it->second->last_access > ttl_) {
      busy.unlock();
      it = sessions_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

json SessionStore::payload(const Session& s) {
  const TrackedSeed& t = s.stack.back();
  json colors = json::array();
  for (int v = 1; v <= t.num_vertices(); ++v)
    colors.push_back(t.quiver.is_frozen(v) ? "frozen" : to_string(vertex_color(t, v)));
  json fpolys = nullptr;
  if (t.tracks_f) {
    fpolys = json::array();
    for (const Poly& f : t.fpolys) fpolys.push_back(to_string(f));
  }
  const auto sigma = red_permutation(t);
  return {{"id", s.id},
          {"preset", s.preset},
          {"labels", s.labels},
          {"quiver", to_json(t.quiver)},
          {"colors", colors},
          {"g_matrix", columns_json(t.gmatrix)},
          {"c_matrix", columns_json(t.cmatrix)},
          {"f_polys", fpolys},
          {"track_f", t.tracks_f},
          {"history", t.history},
          {"all_red", sigma.has_value()},
          {"sigma", sigma ? json(*sigma) : json(nullptr)},
          {"undo_depth", s.stack.size() - 1}};
}

json dtf_report(int k, int n, int p, int q) {
  const BoxPoset b = weng_box(k, n, p, q);
  const Poly f = dtf_closed_form(k, n, p, q);
  return {{"vertex", {p, q}}, {"box", {b.r, b.s, b.t}}, {"terms", f.num_terms()}, {"poly", to_string(f)}};
}

json gvector_report(int k, int n, const std::string& index) {
  const PluckerIndex idx = PluckerIndex::parse(index, n);
  if (idx.k() != k) throw std::invalid_argument("index must have exactly k entries");
  const TriangularSeed seed(k, n);
  json terms = json::array();
  for (const auto& [v, c] : g_vector_terms(idx))
    terms.push_back({{"vertex", v.str()}, {"id", seed.id(v)}, {"plucker", seed.label(seed.id(v)).str()}, {"coefficient", c}});
  json vec = json::array();
  for (const Integer& x : g_vector_plucker(idx, seed)) vec.push_back(x.to_int64());
  return {{"k", k}, {"n", n}, {"index", idx.str()}, {"terms", terms}, {"vector", vec}};
}

}  // namespace grassdt
