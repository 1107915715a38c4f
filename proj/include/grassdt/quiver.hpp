#pragma once

#include "grassdt/matrix.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grassdt {

/// Mutation was requested at a frozen vertex.
class FrozenVertexError : public std::invalid_argument {
 public:
  explicit FrozenVertexError(int vertex)
      : std::invalid_argument("vertex is frozen: " + std::to_string(vertex)), vertex_(vertex) {}
  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

using Arrow = std::pair<int, int>;

/// Finite quiver with vertices 1..m, of which 1..r are mutable and r+1..m are
/// frozen. Arrow multiplicities are stored as an m×m count matrix.
///
/// Invariants enforced on construction: no loops, vertex ids in range, and no
/// 2-cycle on any pair touching a mutable vertex. Arrows between two frozen
/// vertices are kept as given but play no role in mutation.
class IceQuiver {
 public:
  IceQuiver() = default;
  IceQuiver(int num_vertices, int num_mutable, const std::vector<Arrow>& arrows);

  int num_vertices() const { return static_cast<int>(counts_.rows()); }
  int num_mutable() const { return num_mutable_; }
  bool is_mutable(int v) const { return v >= 1 && v <= num_mutable_; }
  bool is_frozen(int v) const { return v > num_mutable_ && v <= num_vertices(); }

  /// Number of arrows source → target.
  std::int64_t arrows(int source, int target) const { return counts_(source - 1, target - 1); }
  std::int64_t total_arrows() const { return counts_.sum(); }

  /// Arrow list sorted lexicographically, with repetition for multiplicity.
  std::vector<Arrow> arrow_list() const;

  /// The same quiver with frozen-frozen arrows removed.
  IceQuiver without_frozen_arrows() const;

  friend bool operator==(const IceQuiver& a, const IceQuiver& b) {
    return a.num_mutable_ == b.num_mutable_ && a.counts_.rows() == b.counts_.rows() &&
           a.counts_ == b.counts_;
  }

 private:
  friend IceQuiver mutate(const IceQuiver& q, int k);
  IceQuiver(int num_mutable, Matrix<std::int64_t> counts);
  void validate() const;

  int num_mutable_ = 0;
  Matrix<std::int64_t> counts_;
};

/// Quiver mutation at mutable vertex k (1-based).
IceQuiver mutate(const IceQuiver& q, int k);

/// Applies mutations in the order given (first entry first).
IceQuiver mutate(const IceQuiver& q, const std::vector<int>& word);

/// Quiver on the mutable vertices only.
IceQuiver mutable_part(const IceQuiver& q);

/// Adds frozen vertices m+1..2m and arrows i → m+i for every vertex i.
IceQuiver principal_extension(const IceQuiver& q);

/// Adds frozen vertices m+1..m+r and arrows m+i → i for every mutable i, so
/// the framing rows of the exchange matrix form +I.
IceQuiver coframed_extension(const IceQuiver& q);

/// m×r matrix with entries #(i→j) − #(j→i).
template <class Scalar = Integer>
Matrix<Scalar> exchange_matrix(const IceQuiver& q) {
  const int m = q.num_vertices(), r = q.num_mutable();
  Matrix<Scalar> b(m, r);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= r; ++j)
      b(i - 1, j - 1) = Scalar(static_cast<long long>(q.arrows(i, j) - q.arrows(j, i)));
  return b;
}

/// Square exchange matrix of the quiver with every vertex declared mutable.
template <class Scalar = Integer>
Matrix<Scalar> unfrozen_exchange_matrix(const IceQuiver& q) {
  const int m = q.num_vertices();
  Matrix<Scalar> b(m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      b(i - 1, j - 1) = Scalar(static_cast<long long>(q.arrows(i, j) - q.arrows(j, i)));
  return b;
}

nlohmann::json to_json(const IceQuiver& q);
IceQuiver quiver_from_json(const nlohmann::json& j);

}  // namespace grassdt
