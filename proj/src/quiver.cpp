#include "grassdt/quiver.hpp"

#include <algorithm>
#include <string>

namespace grassdt {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("arrow multiplicity overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("arrow multiplicity overflow");
  return out;
}

}  // namespace

IceQuiver::IceQuiver(int num_vertices, int num_mutable, const std::vector<Arrow>& arrows)
    : num_mutable_(num_mutable) {
  if (num_vertices < 1) throw std::invalid_argument("quiver needs at least one vertex");
  if (num_mutable < 0 || num_mutable > num_vertices)
    throw std::invalid_argument("num_mutable must lie in 0..num_vertices");
  counts_ = Matrix<std::int64_t>::Zero(num_vertices, num_vertices);
  for (const auto& [s, t] : arrows) {
    if (s < 1 || s > num_vertices || t < 1 || t > num_vertices)
      throw std::invalid_argument("arrow endpoint out of range: " + std::to_string(s) + "->" +
                                  std::to_string(t));
    if (s == t) throw std::invalid_argument("loop at vertex " + std::to_string(s));
    counts_(s - 1, t - 1) += 1;
  }
  validate();
}

IceQuiver::IceQuiver(int num_mutable, Matrix<std::int64_t> counts)
    : num_mutable_(num_mutable), counts_(std::move(counts)) {}

void IceQuiver::validate() const {
  const int m = num_vertices();
  for (int i = 0; i < m; ++i) {
    if (counts_(i, i) != 0) throw std::invalid_argument("loop at vertex " + std::to_string(i + 1));
    for (int j = i + 1; j < m; ++j) {
      if (i >= num_mutable_ && j >= num_mutable_) continue;
      if (counts_(i, j) > 0 && counts_(j, i) > 0)
        throw std::invalid_argument("2-cycle between vertices " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1));
    }
  }
}

std::vector<Arrow> IceQuiver::arrow_list() const {
  std::vector<Arrow> out;
  const int m = num_vertices();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (std::int64_t c = 0; c < counts_(i, j); ++c) out.emplace_back(i + 1, j + 1);
  return out;
}

IceQuiver IceQuiver::without_frozen_arrows() const {
  Matrix<std::int64_t> c = counts_;
  const int m = num_vertices();
  for (int i = num_mutable_; i < m; ++i)
    for (int j = num_mutable_; j < m; ++j) c(i, j) = 0;
  return IceQuiver(num_mutable_, std::move(c));
}

IceQuiver mutate(const IceQuiver& q, int k) {
  const int m = q.num_vertices(), r = q.num_mutable();
  if (k < 1 || k > m) throw std::out_of_range("vertex out of range: " + std::to_string(k));
  if (k > r) throw FrozenVertexError(k);
  const int kk = k - 1;
  const auto& a = q.counts_;
  Matrix<std::int64_t> c = a;

  // Composite arrows i -> j for each path i -> k -> j, never between two frozen vertices.
  for (int i = 0; i < m; ++i) {
    if (i == kk || a(i, kk) == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (j == kk || j == i || a(kk, j) == 0) continue;
      if (i >= r && j >= r) continue;
      c(i, j) = checked_add(c(i, j), checked_mul(a(i, kk), a(kk, j)));
    }
  }
  // Reverse the arrows at k.
  for (int j = 0; j < m; ++j) {
    c(kk, j) = a(j, kk);
    c(j, kk) = a(kk, j);
  }
  // Cancel 2-cycles touching a mutable vertex.
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (i >= r && j >= r) continue;
      const std::int64_t d = std::min(c(i, j), c(j, i));
      c(i, j) -= d;
      c(j, i) -= d;
    }
  }
  return IceQuiver(r, std::move(c));
}

IceQuiver mutate(const IceQuiver& q, const std::vector<int>& word) {
  IceQuiver out = q;
  for (int k : word) out = mutate(out, k);
  return out;
}

IceQuiver mutable_part(const IceQuiver& q) {
  const int r = q.num_mutable();
  if (r == 0) throw std::invalid_argument("quiver has no mutable vertices");
  std::vector<Arrow> arrows;
  for (const auto& [s, t] : q.arrow_list())
    if (s <= r && t <= r) arrows.emplace_back(s, t);
  return IceQuiver(r, r, arrows);
}

IceQuiver principal_extension(const IceQuiver& q) {
  const int m = q.num_vertices();
  auto arrows = q.arrow_list();
  for (int i = 1; i <= m; ++i) arrows.emplace_back(i, m + i);
  return IceQuiver(2 * m, q.num_mutable(), arrows);
}

IceQuiver coframed_extension(const IceQuiver& q) {
  const int m = q.num_vertices(), r = q.num_mutable();
  auto arrows = q.arrow_list();
  for (int i = 1; i <= r; ++i) arrows.emplace_back(m + i, i);
  return IceQuiver(m + r, r, arrows);
}

nlohmann::json to_json(const IceQuiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& [s, t] : q.arrow_list()) arrows.push_back({s, t});
  return {{"num_vertices", q.num_vertices()}, {"num_mutable", q.num_mutable()}, {"arrows", arrows}};
}

IceQuiver quiver_from_json(const nlohmann::json& j) {
  try {
    const int m = j.at("num_vertices").get<int>();
    const int r = j.at("num_mutable").get<int>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 2) throw std::invalid_argument("arrow must be a [source, target] pair");
      arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return IceQuiver(m, r, arrows);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed quiver JSON: ") + e.what());
  }
}

}  // namespace grassdt
