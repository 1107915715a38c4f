#include "grassdt/dt.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace grassdt {

std::vector<int> rectangular_sweep_sequence(int k, int n) {
  const TriangularSeed seed(k, n, false);
  std::vector<int> word;
  for (int w = n - k - 1; w >= 1; --w)
    for (int y = k - 1; y >= 1; --y)
      for (int x = 1; x <= w; ++x) word.push_back(seed.id(SeedVertex::grid(x, y)));
  return word;
}

std::optional<std::vector<int>> red_permutation(const TrackedSeed& s) {
  if (!all_red(s)) return std::nullopt;
  const int r = s.num_mutable();
  const IntMatrix g = s.mutable_gmatrix();
  std::vector<int> sigma(r, 0);
  std::vector<bool> used(r, false);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) {
      IntVector target = IntVector::Zero(r);
      target(i) = Integer(-1);
      if (g.col(j) == target) sigma[j] = i + 1;
    }
    // All red forces G = -P for a permutation P; anything else is a bug upstream.
    if (sigma[j] == 0 || used[sigma[j] - 1]) throw std::logic_error("all-red seed without a permutation G-matrix");
    used[sigma[j] - 1] = true;
  }
  return sigma;
}

GreenSeqReport run_reddening(const IceQuiver& q, const std::vector<int>& word, const SeedVisitor& visit) {
  GreenSeqReport rep;
  rep.word = word;
  TrackedSeed s = initial_tracked(q);
  if (visit) visit(s);
  for (int k : word) {
    const bool green = vertex_color(s, k) == Color::Green;
    rep.step_green.push_back(green);
    rep.all_steps_green = rep.all_steps_green && green;
    s = mutate_tracked(s, k);
    if (visit) visit(s);
  }
  rep.final_g = s.gmatrix;
  rep.sigma = red_permutation(s);
  rep.is_reddening = rep.sigma.has_value();
  if (rep.sigma && s.tracks_f) {
    std::vector<int> inverse(s.num_mutable());
    for (int j = 0; j < s.num_mutable(); ++j) inverse[(*rep.sigma)[j] - 1] = j + 1;
    for (int j : inverse) rep.dtf.push_back(s.fpolys[j - 1]);
  }
  rep.final_seed = std::move(s);
  return rep;
}

std::optional<std::vector<int>> greedy_green_search(const TrackedSeed& start, int max_steps, TieBreak tie_break) {
  TrackedSeed s = start;
  s.tracks_f = false;
  s.fpolys.clear();
  std::vector<int> word;
  const int r = s.num_mutable();
  while (true) {
    int pick = 0;
    for (int i = 1; i <= r; ++i) {
      const int k = tie_break == TieBreak::LowestIndex ? i : r + 1 - i;
      if (vertex_color(s, k) == Color::Green) {
        pick = k;
        break;
      }
    }
    if (pick == 0) return word;
    if (static_cast<int>(word.size()) >= max_steps) return std::nullopt;
    s = mutate_tracked(s, pick);
    word.push_back(pick);
  }
}

std::optional<std::vector<int>> greedy_green_search(const IceQuiver& q, int max_steps, TieBreak tie_break) {
  return greedy_green_search(initial_tracked(q, false), max_steps, tie_break);
}

BoxPoset weng_box(int k, int n, int p, int q) {
  if (k < 2 || n - k < 2 || p < 1 || p > n - k - 1 || q < 1 || q > k - 1)
    throw std::out_of_range("vertex (" + std::to_string(p) + "," + std::to_string(q) + ") is not in the mutable grid");
  return {(n - k) - p, k - q, 1 + std::min(p - 1, q - 1)};
}

EnumerationLimits EnumerationLimits::from_env() {
  EnumerationLimits lim;
  if (const char* env = std::getenv("GRASS_DT_MAX_CELLS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw std::invalid_argument("GRASS_DT_MAX_CELLS must be a positive integer");
    lim.max_cells = v;
  }
  return lim;
}

Integer macmahon_count(int r, int s, int t) {
  if (r < 1 || s < 1 || t < 1) throw std::invalid_argument("box sides must be positive");
  Rational prod(1);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j)
      for (int l = 1; l <= t; ++l) prod = prod * Rational(i + j + l - 1, i + j + l - 2);
  return prod.numerator();
}

namespace {

void fill(const BoxPoset& b, HeightArray& h, int pos, const std::function<void(const HeightArray&)>& visit) {
  if (pos == b.r * b.s) {
    visit(h);
    return;
  }
  const int i = pos / b.s, j = pos % b.s;
  int cap = b.t;
  if (i > 0) cap = std::min(cap, h[pos - b.s]);
  if (j > 0) cap = std::min(cap, h[pos - 1]);
  for (int v = 0; v <= cap; ++v) {
    h[pos] = v;
    fill(b, h, pos + 1, visit);
  }
}

}  // namespace

void enumerate_downsets(const BoxPoset& box, const std::function<void(const HeightArray&)>& visit,
                        const EnumerationLimits& limits) {
  if (box.r < 1 || box.s < 1 || box.t < 1) throw std::invalid_argument("box sides must be positive");
  if (box.cells() > limits.max_cells || macmahon_count(box.r, box.s, box.t) > Integer(limits.max_downsets))
    throw std::length_error("box too large");
  HeightArray h(box.r * box.s, 0);
  fill(box, h, 0, visit);
}

Poly dtf_closed_form(int k, int n, int p, int q, const EnumerationLimits& limits) {
  const BoxPoset box = weng_box(k, n, p, q);
  const TriangularSeed seed(k, n, false);
  const int nvars = seed.num_mutable();
  const int w = n - k - 1;

  // Variable index of every cell, computed once.
  std::vector<int> var(box.cells());
  for (int a = 1; a <= box.r; ++a)
    for (int b = 1; b <= box.s; ++b)
      for (int c = 1; c <= box.t; ++c) {
        const int x = p + a - c, y = q + b - c;
        if (x < 1 || x > w || y < 1 || y > k - 1)
          throw std::logic_error("closed-form monomial leaves the mutable grid at (" + std::to_string(x) + "," +
                                 std::to_string(y) + ")");
        var[((a - 1) * box.s + (b - 1)) * box.t + (c - 1)] = seed.id(SeedVertex::grid(x, y)) - 1;
      }

  Poly out(nvars);
  Poly::Exponents e(nvars);
  enumerate_downsets(
      box,
      [&](const HeightArray& h) {
        std::fill(e.begin(), e.end(), 0u);
        for (int cell = 0; cell < box.r * box.s; ++cell)
          for (int c = 0; c < h[cell]; ++c) ++e[var[cell * box.t + c]];
        if (!out.coefficient(e).is_zero()) throw std::logic_error("two down-sets share a monomial");
        out.add_term(e, Integer(1));
      },
      limits);
  return out;
}

std::vector<Layer> injective_layers(int k, int n, int p, int q) {
  const BoxPoset box = weng_box(k, n, p, q);
  std::vector<Layer> out;
  for (int d = 0; d > -box.t; --d) out.push_back({d, p + d, n - k - 1 + d, q + d, k - 1 + d});
  return out;
}

}  // namespace grassdt
