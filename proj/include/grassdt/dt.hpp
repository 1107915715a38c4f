#pragma once

// Reddening sequences, DT F-polynomials by mutation, and the closed form as a
// sum over down-sets of a product of three chains.

#include "grassdt/grassmann.hpp"
#include "grassdt/poly.hpp"
#include "grassdt/tracking.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace grassdt {

/// Sweep of the triangular-seed grid of Gr(k, n), as mutable vertex ids in
/// applied order: for w = n-k-1 down to 1, for y = k-1 down to 1, for x = 1..w.
std::vector<int> rectangular_sweep_sequence(int k, int n);

struct GreenSeqReport {
  std::vector<int> word;
  std::vector<bool> step_green;  // color of the mutated vertex before each step
  bool all_steps_green = true;
  bool is_reddening = false;
  /// sigma[j-1] = i when g_j(t') = -e_i on the mutable block.
  std::optional<std::vector<int>> sigma;
  IntMatrix final_g;
  /// dtf[i-1] = F_j(t') for the j with g_j(t') = -e_i. Empty unless reddening.
  std::vector<Poly> dtf;
  TrackedSeed final_seed;
};

/// Runs `word` from the initial seed of `q`. `visit`, when given, sees every
/// seed along the way, the initial one included.
GreenSeqReport run_reddening(const IceQuiver& q, const std::vector<int>& word, const SeedVisitor& visit = {});

/// sigma of an all-red seed (sigma[j-1] = i when g_j = -e_i on the mutable
/// block), or nullopt if some vertex is green.
std::optional<std::vector<int>> red_permutation(const TrackedSeed& s);

enum class TieBreak { LowestIndex, HighestIndex };

/// Mutates a green vertex (chosen by `tie_break`) until all vertices are red.
/// Returns the word, or nullopt if `max_steps` runs out first.
std::optional<std::vector<int>> greedy_green_search(const TrackedSeed& start, int max_steps,
                                                    TieBreak tie_break = TieBreak::LowestIndex);
std::optional<std::vector<int>> greedy_green_search(const IceQuiver& q, int max_steps,
                                                    TieBreak tie_break = TieBreak::LowestIndex);

struct BoxPoset {
  int r, s, t;
  int cells() const { return r * s * t; }
  friend bool operator==(const BoxPoset&, const BoxPoset&) = default;
};

/// Box for grid vertex (p, q) = Grid(x = p, y = q):
/// r = (n-k) - p, s = k - q, t = 1 + min(p-1, q-1).
BoxPoset weng_box(int k, int n, int p, int q);

/// A down-set as its height array: h[(p'-1)*s + (q'-1)] in 0..t, weakly
/// decreasing along both axes; the down-set is {(p',q',r') : r' <= h}.
using HeightArray = std::vector<int>;

struct EnumerationLimits {
  long long max_cells = 64;
  long long max_downsets = 10'000'000;
  /// Defaults, with max_cells overridden by GRASS_DT_MAX_CELLS when set.
  static EnumerationLimits from_env();
};

/// Calls `visit` once per down-set, in lexicographic order of the height
/// array. Throws std::length_error("box too large") beyond `limits`.
void enumerate_downsets(const BoxPoset& box, const std::function<void(const HeightArray&)>& visit,
                        const EnumerationLimits& limits = EnumerationLimits::from_env());

/// Number of down-sets of L_r x L_s x L_t (plane partitions in an r x s x t box).
Integer macmahon_count(int r, int s, int t);

/// Closed-form DT F-polynomial at Grid(p, q) in the variables y_1..y_R of the
/// mutable grid (R = (k-1)(n-k-1), numbered as in TriangularSeed).
Poly dtf_closed_form(int k, int n, int p, int q, const EnumerationLimits& limits = EnumerationLimits::from_env());

struct Layer {
  int degree;  // 0, -1, ..., -(t-1)
  int x_lo, x_hi, y_lo, y_hi;
  int size() const { return (x_hi - x_lo + 1) * (y_hi - y_lo + 1); }
};

/// Supports of the graded pieces: the rectangle [p, n-k-1] x [q, k-1] shifted by (d, d).
std::vector<Layer> injective_layers(int k, int n, int p, int q);

}  // namespace grassdt
