#pragma once

// Independent checks: exact points of the Grassmannian, numeric exchange-graph
// search that recognizes Plücker coordinates by value, and symbolic Laurent
// mutation for the grading check.

#include "grassdt/grassmann.hpp"
#include "grassdt/matrix.hpp"
#include "grassdt/poly.hpp"
#include "grassdt/tracking.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace grassdt {

class NonGenericPoint : public std::domain_error {
 public:
  NonGenericPoint() : std::domain_error("non-generic point") {}
};

/// Determinant of the k×k submatrix on the columns of `index`.
Rational plucker_value(const RationalMatrix& m, const PluckerIndex& index);

/// True when every Plücker coordinate labeling a vertex of the triangular seed is nonzero.
bool seed_minors_nonzero(const RationalMatrix& m);

/// k×n matrix with entries uniform in [-bound, bound], resampled until every
/// Plücker coordinate is nonzero (so in particular the seed labels).
/// Throws std::runtime_error when `max_attempts` is exhausted.
RationalMatrix random_grassmann_point(int k, int n, std::mt19937_64& rng, int bound = 9, int max_attempts = 1000);
RationalMatrix random_grassmann_point(int k, int n, std::uint64_t rng_seed);

struct NumericSeed {
  IceQuiver quiver;
  std::vector<Rational> values;  // per vertex, index id-1
};

/// Triangular seed of Gr(k, n) with each vertex evaluated at `point`.
NumericSeed numeric_seed(const TriangularSeed& seed, const RationalMatrix& point);

/// value_k <- (prod_{i->k} value_i + prod_{k->j} value_j) / value_k.
/// Throws NonGenericPoint when value_k or the new value is zero.
NumericSeed mutate_numeric(const NumericSeed& s, int k);

struct BfsOptions {
  int max_clusters = 100000;
  int num_points = 3;
  std::uint64_t rng_seed = 1;
  int max_resamples = 8;
  /// Recheck every dedup decision by comparing the cluster values.
  bool verify_dedup = false;
  bool track_f = false;
  SeedVisitor visit;  // sees every tracked seed that enters the visited set
};

struct BfsResult {
  /// Extended g-vector (indexed by seed vertex id - 1) of each identified Plücker coordinate.
  std::map<PluckerIndex, IntVector> gvectors;
  bool complete = false;
  int clusters = 0;
  int resamples = 0;
  /// Contradictions found along the way; empty in a sound run.
  std::vector<std::string> problems;
};

/// Breadth-first search of the exchange graph from the triangular seed.
BfsResult bfs_exchange_graph(int k, int n, const BfsOptions& options = {});

/// Cluster variables along `word` as Laurent polynomials in x_1..x_m, m the
/// number of vertices of `q` (frozen variables never change, but are returned).
/// Throws std::length_error("expression too large") past `max_terms` terms.
std::vector<LaurentPoly> laurent_mutation(const IceQuiver& q, const std::vector<int>& word,
                                          std::size_t max_terms = 200000);

/// Grading of the variables of coframed_extension(q): x_j has degree e_j for
/// j <= m and x_{m+j} has degree -(column j of B), an element of Z^m.
IntMatrix principal_grading(const IceQuiver& q);

/// Common degree of all terms, or nullopt if `p` is zero or not homogeneous.
/// `grading` has one column per variable.
std::optional<IntVector> homogeneous_degree(const LaurentPoly& p, const IntMatrix& grading);

}  // namespace grassdt
