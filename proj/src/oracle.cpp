#include "grassdt/oracle.hpp"

#include <deque>
#include <set>

namespace grassdt {

Rational plucker_value(const RationalMatrix& m, const PluckerIndex& index) {
  if (m.cols() != index.n() || m.rows() != index.k()) throw std::invalid_argument("index does not fit the matrix");
  RationalMatrix sub(index.k(), index.k());
  for (int j = 0; j < index.k(); ++j) sub.col(j) = m.col(index.entries()[j] - 1);
  return determinant(sub);
}

bool seed_minors_nonzero(const RationalMatrix& m) {
  const TriangularSeed seed(static_cast<int>(m.rows()), static_cast<int>(m.cols()), false);
  for (int v = 1; v <= seed.num_vertices(); ++v)
    if (plucker_value(m, seed.label(v)) == Rational(0)) return false;
  return true;
}

RationalMatrix random_grassmann_point(int k, int n, std::mt19937_64& rng, int bound, int max_attempts) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  const auto all = all_plucker_indices(k, n);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    RationalMatrix m(k, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(dist(rng));
    bool ok = true;
    for (const auto& idx : all)
      if (plucker_value(m, idx) == Rational(0)) {
        ok = false;
        break;
      }
    if (ok) return m;
  }
  throw std::runtime_error("no generic point found within the resample budget");
}

RationalMatrix random_grassmann_point(int k, int n, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  return random_grassmann_point(k, n, rng);
}

NumericSeed numeric_seed(const TriangularSeed& seed, const RationalMatrix& point) {
  NumericSeed s{seed.quiver(), {}};
  for (int v = 1; v <= seed.num_vertices(); ++v) s.values.push_back(plucker_value(point, seed.label(v)));
  return s;
}

NumericSeed mutate_numeric(const NumericSeed& s, int k) {
  const IceQuiver& q = s.quiver;
  if (!q.is_mutable(k)) throw FrozenVertexError(k);
  if (s.values[k - 1] == Rational(0)) throw NonGenericPoint();
  Rational in(1), out(1);
  for (int i = 1; i <= q.num_vertices(); ++i) {
    for (long long a = q.arrows(i, k); a > 0; --a) in = in * s.values[i - 1];
    for (long long a = q.arrows(k, i); a > 0; --a) out = out * s.values[i - 1];
  }
  NumericSeed next{mutate(q, k), s.values};
  next.values[k - 1] = (in + out) / s.values[k - 1];
  if (next.values[k - 1] == Rational(0)) throw NonGenericPoint();
  return next;
}

namespace {

using SeedKey = std::vector<std::vector<long long>>;

SeedKey key_of(const TrackedSeed& s) {
  SeedKey key;
  for (int j = 0; j < s.num_mutable(); ++j) {
    std::vector<long long> col;
    for (Eigen::Index i = 0; i < s.gmatrix.rows(); ++i) col.push_back(s.gmatrix(i, j).to_int64());
    key.push_back(std::move(col));
  }
  std::sort(key.begin(), key.end());
  return key;
}

struct Node {
  TrackedSeed tracked;
  std::vector<NumericSeed> numeric;  // one per sample point
};

// Values of one vertex across the sample points.
std::vector<Rational> slot_values(const Node& node, int v) {
  std::vector<Rational> out;
  for (const auto& ns : node.numeric) out.push_back(ns.values[v - 1]);
  return out;
}

std::multiset<std::vector<Rational>> cluster_values(const Node& node) {
  std::multiset<std::vector<Rational>> out;
  for (int v = 1; v <= node.tracked.num_mutable(); ++v) out.insert(slot_values(node, v));
  return out;
}

BfsResult bfs_once(int k, int n, const BfsOptions& opt, std::vector<RationalMatrix>& points) {
  const TriangularSeed seed(k, n);
  BfsResult res;

  // Lookup from value tuples to Plücker indices; a tuple shared by two
  // indices is useless for identification and is dropped.
  std::map<std::vector<Rational>, std::optional<PluckerIndex>> by_value;
  for (const auto& idx : all_plucker_indices(k, n)) {
    std::vector<Rational> vals;
    for (const auto& m : points) vals.push_back(plucker_value(m, idx));
    auto [it, inserted] = by_value.try_emplace(vals, idx);
    if (!inserted) it->second.reset();
  }
  std::map<std::vector<long long>, PluckerIndex> owner_of_g;

  auto identify = [&](const Node& node) {
    for (int v = 1; v <= node.tracked.num_vertices(); ++v) {
      auto it = by_value.find(slot_values(node, v));
      if (it == by_value.end() || !it->second) continue;
      const PluckerIndex& idx = *it->second;
      const IntVector g = node.tracked.gmatrix.col(v - 1);
      std::vector<long long> gkey;
      for (Eigen::Index i = 0; i < g.size(); ++i) gkey.push_back(g(i).to_int64());
      auto known = res.gvectors.find(idx);
      if (known != res.gvectors.end()) {
        if (known->second != g) res.problems.push_back("p_" + idx.str() + " seen with two g-vectors");
        continue;
      }
      auto clash = owner_of_g.find(gkey);
      if (clash != owner_of_g.end()) {
        res.problems.push_back("p_" + idx.str() + " and p_" + clash->second.str() + " share a g-vector");
        continue;
      }
      res.gvectors.emplace(idx, g);
      owner_of_g.emplace(gkey, idx);
    }
  };

  Node start{initial_tracked(seed.quiver(), opt.track_f), {}};
  for (const auto& m : points) start.numeric.push_back(numeric_seed(seed, m));

  std::map<SeedKey, std::multiset<std::vector<Rational>>> visited;
  std::deque<Node> frontier;
  visited.emplace(key_of(start.tracked), opt.verify_dedup ? cluster_values(start) : decltype(cluster_values(start)){});
  if (opt.visit) opt.visit(start.tracked);
  identify(start);
  res.clusters = 1;
  frontier.push_back(std::move(start));

  while (!frontier.empty()) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    for (int v = 1; v <= node.tracked.num_mutable(); ++v) {
      Node next{mutate_tracked(node.tracked, v), {}};
      for (const auto& ns : node.numeric) next.numeric.push_back(mutate_numeric(ns, v));
      const SeedKey key = key_of(next.tracked);
      auto found = visited.find(key);
      if (found != visited.end()) {
        if (opt.verify_dedup && found->second != cluster_values(next))
          res.problems.push_back("two clusters with the same g-vectors have different values");
        continue;
      }
      if (res.clusters >= opt.max_clusters) return res;  // incomplete
      visited.emplace(key, opt.verify_dedup ? cluster_values(next) : std::multiset<std::vector<Rational>>{});
      ++res.clusters;
      if (opt.visit) opt.visit(next.tracked);
      identify(next);
      frontier.push_back(std::move(next));
    }
  }
  res.complete = true;
  return res;
}

}  // namespace

BfsResult bfs_exchange_graph(int k, int n, const BfsOptions& opt) {
  if (opt.num_points < 1) throw std::invalid_argument("need at least one sample point");
  std::mt19937_64 rng(opt.rng_seed);
  for (int attempt = 0;; ++attempt) {
    std::vector<RationalMatrix> points;
    for (int a = 0; a < opt.num_points; ++a) points.push_back(random_grassmann_point(k, n, rng));
    try {
      BfsResult res = bfs_once(k, n, opt, points);
      res.resamples = attempt;
      return res;
    } catch (const NonGenericPoint&) {
      if (attempt >= opt.max_resamples) throw;
    }
  }
}

std::vector<LaurentPoly> laurent_mutation(const IceQuiver& q0, const std::vector<int>& word, std::size_t max_terms) {
  const int m = q0.num_vertices();
  std::vector<LaurentPoly> x;
  for (int i = 1; i <= m; ++i) x.push_back(LaurentPoly::variable(m, i));
  IceQuiver q = q0;
  for (int k : word) {
    if (!q.is_mutable(k)) throw FrozenVertexError(k);
    LaurentPoly in = LaurentPoly::one(m), out = LaurentPoly::one(m);
    for (int i = 1; i <= m; ++i) {
      if (q.arrows(i, k) > 0) in *= x[i - 1].pow(static_cast<unsigned>(q.arrows(i, k)));
      if (q.arrows(k, i) > 0) out *= x[i - 1].pow(static_cast<unsigned>(q.arrows(k, i)));
    }
    LaurentPoly num = in + out;
    if (num.num_terms() > max_terms) throw std::length_error("expression too large");
    x[k - 1] = num.divide_exact(x[k - 1], max_terms);
    if (x[k - 1].num_terms() > max_terms) throw std::length_error("expression too large");
    q = mutate(q, k);
  }
  return x;
}

IntMatrix principal_grading(const IceQuiver& q) {
  const int m = q.num_vertices(), r = q.num_mutable();
  IntMatrix deg(m, m + r);
  deg.leftCols(m) = IntMatrix::Identity(m, m);
  deg.rightCols(r) = -exchange_matrix<Integer>(q);
  return deg;
}

std::optional<IntVector> homogeneous_degree(const LaurentPoly& p, const IntMatrix& grading) {
  if (p.is_zero()) return std::nullopt;
  if (grading.cols() != p.num_vars()) throw std::invalid_argument("grading does not match the variables");
  std::optional<IntVector> common;
  for (const auto& [e, c] : p.terms()) {
    IntVector d = IntVector::Zero(grading.rows());
    for (int i = 0; i < p.num_vars(); ++i)
      if (e[i] != 0) d += grading.col(i) * Integer(static_cast<long long>(e[i]));
    if (!common) common = d;
    else if (*common != d) return std::nullopt;
  }
  return common;
}

}  // namespace grassdt
