#pragma once

// Bookkeeping along a mutation word: c-vectors, extended g-vectors and
// F-polynomials relative to a fixed initial seed.
//
// Mutation words are given in applied order, first element first. A word
// written in operator notation as mu_1 mu_2 mu_3 (rightmost applied first)
// corresponds to the applied-order list {3, 2, 1}.

#include "grassdt/matrix.hpp"
#include "grassdt/poly.hpp"
#include "grassdt/quiver.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace grassdt {

/// A c-vector or a G-matrix row that should be sign-coherent is not.
class SignCoherenceError : public std::logic_error {
 public:
  explicit SignCoherenceError(const std::string& what)
      : std::logic_error("sign-coherence violated: " + what) {}
};

enum class Color { Green, Red };

const char* to_string(Color c);

struct TrackedSeed {
  /// Current quiver Q(t), frozen vertices included.
  IceQuiver quiver;
  /// r×r; column i is the c-vector of mutable vertex i.
  IntMatrix cmatrix;
  /// m×m; column i is the extended g-vector of vertex i. Frozen columns stay e_i.
  IntMatrix gmatrix;
  /// F-polynomials of the mutable vertices in y_1..y_r; empty when untracked.
  std::vector<Poly> fpolys;
  bool tracks_f = true;
  /// Vertices mutated so far, in applied order.
  std::vector<int> history;

  int num_mutable() const { return quiver.num_mutable(); }
  int num_vertices() const { return quiver.num_vertices(); }
  /// Top-left r×r block of the G-matrix.
  IntMatrix mutable_gmatrix() const { return gmatrix.topLeftCorner(num_mutable(), num_mutable()); }
};

using SeedVisitor = std::function<void(const TrackedSeed&)>;

TrackedSeed initial_tracked(const IceQuiver& q, bool track_f = true);

/// Green iff c_k >= 0. Throws SignCoherenceError for a zero or mixed c-vector.
Color vertex_color(const TrackedSeed& s, int k);
std::vector<Color> vertex_colors(const TrackedSeed& s);
bool all_red(const TrackedSeed& s);

/// E_{k,eps}(Q): identity except column k, which has -1 on the diagonal and
/// [-eps * b_ik]_+ in row i != k. Size m×m.
template <class Scalar = Integer>
Matrix<Scalar> e_matrix(const IceQuiver& q, int k, int eps) {
  if (!q.is_mutable(k)) throw FrozenVertexError(k);
  const int m = q.num_vertices();
  Matrix<Scalar> e = Matrix<Scalar>::Identity(m, m);
  for (int i = 1; i <= m; ++i) {
    if (i == k) continue;
    const long long b = q.arrows(i, k) - q.arrows(k, i);
    e(i - 1, k - 1) = Scalar(std::max(-static_cast<long long>(eps) * b, 0LL));
  }
  e(k - 1, k - 1) = Scalar(-1);
  return e;
}

TrackedSeed mutate_tracked(const TrackedSeed& s, int k);
TrackedSeed mutate_tracked(const TrackedSeed& s, const std::vector<int>& word);

/// Moves the base vertex of a G-matrix across the edge labeled k:
/// returns E_{k,eps}(q) * g, where eps is the common sign of row k of g.
///
/// `q` must be the quiver carried by the new base vertex. Folding this over a
/// word from the far end (starting at the identity) reproduces the G-matrix
/// that mutate_tracked computes going forward.
template <class Derived>
Matrix<typename Derived::Scalar> rebase_g(const Eigen::MatrixBase<Derived>& g, const IceQuiver& q, int k) {
  using Scalar = typename Derived::Scalar;
  if (g.rows() != q.num_vertices()) throw std::invalid_argument("rebase_g: size mismatch");
  const int eps = coherent_sign(g.row(k - 1));
  if (eps == 0) throw SignCoherenceError("row " + std::to_string(k) + " of the G-matrix");
  return e_matrix<Scalar>(q, k, eps) * g;
}

/// G-matrix of the seed reached by `word`, relative to the seed at `start`,
/// computed by rebasing from the end of the word back to its beginning.
IntMatrix rebase_along(const IceQuiver& start, const std::vector<int>& word);

/// C^T * G == I on the mutable block.
bool check_duality(const TrackedSeed& s);

/// Human-readable list of violated seed invariants (empty when all hold):
/// c-vector and G-row sign-coherence, duality, det G = ±1, and F-polynomials
/// with constant term 1 and positive coefficients.
std::vector<std::string> invariant_violations(const TrackedSeed& s);

/// Serializes a matrix as a JSON array of its columns.
nlohmann::json columns_json(const IntMatrix& m);

}  // namespace grassdt
