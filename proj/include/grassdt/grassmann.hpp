#pragma once

// Plücker-index combinatorics for Gr(k, n): Young diagrams, peaks and valleys,
// the triangular seed and the closed g-vector formula.
//
// Grid coordinates: a seed vertex Grid(x, y) is the Plücker coordinate whose
// Young diagram is the rectangle with y rows and x columns. x runs left to
// right (1..n-k); y runs bottom to top (1..k), so row r counted from the top is
// y = k - r. Grid(x, y) is mutable iff x <= n-k-1 and y <= k-1.

#include "grassdt/matrix.hpp"
#include "grassdt/quiver.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grassdt {

/// Strictly increasing k-subset of {1..n}.
class PluckerIndex {
 public:
  PluckerIndex(int n, std::vector<int> entries);
  /// Parses "2,3,5,6" (1-based, increasing).
  static PluckerIndex parse(std::string_view text, int n);
  /// (1, 2, ..., k).
  static PluckerIndex initial(int k, int n);

  int k() const { return static_cast<int>(entries_.size()); }
  int n() const { return n_; }
  const std::vector<int>& entries() const { return entries_; }
  bool contains(int i) const;
  std::string str() const;

  friend bool operator==(const PluckerIndex&, const PluckerIndex&) = default;
  friend auto operator<=>(const PluckerIndex&, const PluckerIndex&) = default;

 private:
  int n_;
  std::vector<int> entries_;
};

/// All k-subsets of {1..n} in lexicographic order.
std::vector<PluckerIndex> all_plucker_indices(int k, int n);

/// Partition shape with k rows listed top to bottom, each at most n-k.
struct YoungDiagram {
  std::vector<int> rows;
  int max_columns = 0;

  int num_boxes() const;
  bool is_empty() const { return num_boxes() == 0; }
  bool has_box(int row, int col) const;
  /// (rows, columns) when the diagram is a nonempty rectangle.
  std::optional<std::pair<int, int>> rectangle() const;
};

YoungDiagram young_diagram(const PluckerIndex& index);

/// Matrix position of a box: row from the top, column from the left, 1-based.
struct Box {
  int row;
  int col;
  friend auto operator<=>(const Box&, const Box&) = default;
};

struct PeaksValleys {
  std::vector<Box> peaks;
  std::vector<Box> valleys;
};

/// Peaks: boxes with no box east or south. Valleys: boxes with a box east and
/// a box south but none south-east. Throws std::invalid_argument when empty.
PeaksValleys peaks_valleys(const YoungDiagram& y);

/// Either the exceptional frozen vertex or a grid vertex.
class SeedVertex {
 public:
  static SeedVertex empty() { return SeedVertex(); }
  static SeedVertex grid(int x, int y) { return SeedVertex(x, y); }
  /// Parses "empty" or "x,y".
  static SeedVertex parse(std::string_view text);

  bool is_empty() const { return x_ == 0; }
  int x() const { return x_; }
  int y() const { return y_; }
  std::string str() const;

  friend bool operator==(const SeedVertex&, const SeedVertex&) = default;
  friend auto operator<=>(const SeedVertex&, const SeedVertex&) = default;

 private:
  SeedVertex() = default;
  SeedVertex(int x, int y) : x_(x), y_(y) {}
  int x_ = 0;
  int y_ = 0;
};

/// The index whose Young diagram is the rectangle with `rows` rows and `cols`
/// columns: (1..k-rows, k-rows+1+cols .. k+cols).
PluckerIndex rectangle_to_plucker(int rows, int cols, int k, int n);
/// Inverse of rectangle_to_plucker; nullopt if Y_I is empty or not a rectangle.
std::optional<std::pair<int, int>> plucker_rectangle_shape(const PluckerIndex& index);

/// The triangular seed of Gr(k, n), 2 <= k <= n-2.
///
/// Vertex ids: mutable vertices first, row-major from the top row (top row first,
/// left to right), i.e. Grid(x, y) has id (n-k-1)(k-1-y) + x. Frozen vertices
/// follow: the top row y = k left to right, then the right column x = n-k
/// from y = k-1 down to 1, then the exceptional vertex last.
class TriangularSeed {
 public:
  TriangularSeed(int k, int n, bool with_frozen_arrows = true);

  int k() const { return k_; }
  int n() const { return n_; }
  int width() const { return n_ - k_ - 1; }    // mutable columns
  int height() const { return k_ - 1; }        // mutable rows
  int num_vertices() const { return quiver_.num_vertices(); }
  int num_mutable() const { return quiver_.num_mutable(); }

  /// Full ice quiver, frozen vertices included.
  const IceQuiver& quiver() const { return quiver_; }
  /// Quiver on the mutable grid only.
  IceQuiver grid_quiver() const { return mutable_part(quiver_); }
  /// Arrows between two frozen vertices (present only when requested).
  const std::vector<Arrow>& frozen_arrows() const { return frozen_arrows_; }

  int id(const SeedVertex& v) const;
  const SeedVertex& vertex(int id) const { return vertices_.at(id - 1); }
  const PluckerIndex& label(int id) const { return labels_.at(id - 1); }
  /// Vertex id carrying Plücker index `index`, if it belongs to the seed.
  std::optional<int> id_of(const PluckerIndex& index) const;

 private:
  int k_, n_;
  IceQuiver quiver_;
  std::vector<SeedVertex> vertices_;
  std::vector<PluckerIndex> labels_;
  std::vector<Arrow> frozen_arrows_;
};

/// g-vector of p_I relative to the triangular seed as (vertex, coefficient)
/// pairs: peaks with +1 and valleys with −1, or the exceptional vertex alone.
std::vector<std::pair<SeedVertex, int>> g_vector_terms(const PluckerIndex& index);
/// The same as a vector indexed by the vertex ids of `seed` (entry id-1).
IntVector g_vector_plucker(const PluckerIndex& index, const TriangularSeed& seed);

/// No cyclically ordered a, b, c, d with a, c in I \ J and b, d in J \ I.
bool noncrossing(const PluckerIndex& a, const PluckerIndex& b);
/// k(n-k)+1 pairwise noncrossing indices.
bool is_plucker_cluster(const std::vector<PluckerIndex>& indices);

bool is_cyclic_interval(const PluckerIndex& index);

/// Rim of the rank-one module of I: at position i in 1..n the x-arrow acts by t
/// iff i is in I and the y-arrow acts by t iff i is not. The rim descends one
/// step at positions in I and rises one step elsewhere; heights are shifted so
/// the lowest point is 0.
struct JksProfile {
  std::vector<bool> x_is_t;   // index i-1
  std::vector<bool> y_is_t;   // index i-1
  std::vector<int> heights;   // positions 0..n
  bool projective = false;
};

JksProfile jks_profile(const PluckerIndex& index);

}  // namespace grassdt
