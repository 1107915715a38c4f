#include "doctest.h"

#include "grassdt/grassmann.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace grassdt;

namespace {

PluckerIndex I(const char* text, int n) { return PluckerIndex::parse(text, n); }

// Labels are written as digit strings, e.g. "134" -> (1,3,4).
PluckerIndex digits(const std::string& s, int n) {
  std::vector<int> e;
  for (char c : s) e.push_back(c - '0');
  return PluckerIndex(n, e);
}

// Brute-force crossing test straight from the definition.
bool crosses_brute(const PluckerIndex& a, const PluckerIndex& b) {
  std::vector<int> amb, bma;
  for (int v : a.entries())
    if (!b.contains(v)) amb.push_back(v);
  for (int v : b.entries())
    if (!a.contains(v)) bma.push_back(v);
  auto cyclic = [](int p, int q, int r, int s) {
    // p, q, r, s cyclically ordered: some rotation is strictly increasing.
    int v[4] = {p, q, r, s};
    for (int rot = 0; rot < 4; ++rot)
      if (v[rot % 4] < v[(rot + 1) % 4] && v[(rot + 1) % 4] < v[(rot + 2) % 4] &&
          v[(rot + 2) % 4] < v[(rot + 3) % 4])
        return true;
    return false;
  };
  for (int p : amb)
    for (int r : amb)
      for (int q : bma)
        for (int s : bma)
          if (cyclic(p, q, r, s)) return true;
  return false;
}

}  // namespace

TEST_CASE("young diagrams") {
  CHECK(young_diagram(I("3,5,7", 7)).rows == std::vector<int>{4, 3, 2});
  CHECK(young_diagram(I("1,2,3", 7)).is_empty());
  CHECK(young_diagram(I("2,3,5,6,7,14,15,19", 19)).rows == std::vector<int>{11, 8, 8, 2, 2, 2, 1, 1});
}

TEST_CASE("peaks and valleys") {
  PeaksValleys pv = peaks_valleys(young_diagram(I("2,3,5,6,7,14,15,19", 19)));
  CHECK(pv.peaks == std::vector<Box>{{1, 11}, {3, 8}, {6, 2}, {8, 1}});
  CHECK(pv.valleys == std::vector<Box>{{1, 8}, {3, 2}, {6, 1}});

  PeaksValleys single = peaks_valleys(YoungDiagram{{1, 0, 0}, 4});
  CHECK(single.peaks == std::vector<Box>{{1, 1}});
  CHECK(single.valleys.empty());

  PeaksValleys full = peaks_valleys(YoungDiagram{{4, 4, 4}, 4});
  CHECK(full.peaks == std::vector<Box>{{3, 4}});
  CHECK(full.valleys.empty());

  CHECK_THROWS_WITH(peaks_valleys(YoungDiagram{{0, 0}, 3}), "no boxes");
}

TEST_CASE("peaks minus valleys is one, diagrams are partitions") {
  for (auto [k, n] : {std::pair{2, 6}, {3, 7}, {4, 9}}) {
    for (const auto& idx : all_plucker_indices(k, n)) {
      YoungDiagram y = young_diagram(idx);
      CHECK(std::is_sorted(y.rows.rbegin(), y.rows.rend()));
      CHECK(y.rows.front() <= n - k);
      CHECK(y.rows.back() >= 0);
      if (y.is_empty()) continue;
      PeaksValleys pv = peaks_valleys(y);
      CHECK(pv.peaks.size() == pv.valleys.size() + 1);
    }
  }
}

TEST_CASE("rectangles and Plücker indices") {
  CHECK(rectangle_to_plucker(3, 8, 8, 19) == I("1,2,3,4,5,14,15,16", 19));
  CHECK(rectangle_to_plucker(2, 3, 4, 9) == I("1,2,6,7", 9));
  CHECK(rectangle_to_plucker(4, 1, 4, 9) == I("2,3,4,5", 9));
  CHECK_THROWS(rectangle_to_plucker(0, 1, 4, 9));
  CHECK_THROWS(rectangle_to_plucker(1, 6, 4, 9));
  for (int rows = 1; rows <= 4; ++rows)
    for (int cols = 1; cols <= 5; ++cols)
      CHECK(plucker_rectangle_shape(rectangle_to_plucker(rows, cols, 4, 9)) == std::make_pair(rows, cols));
  CHECK_FALSE(plucker_rectangle_shape(I("1,3,5,7", 9)).has_value());
  CHECK_FALSE(plucker_rectangle_shape(I("1,2,3,4", 9)).has_value());
}

TEST_CASE("triangular seed of Gr(3,7) matches the reference arrow list") {
  TriangularSeed seed(3, 7);
  CHECK(seed.num_vertices() == 13);
  CHECK(seed.num_vertices() - seed.num_mutable() == 7);

  const std::vector<std::pair<const char*, const char*>> reference{
      {"234", "345"}, {"345", "456"}, {"456", "567"}, {"167", "567"}, {"127", "167"}, {"123", "234"},
      {"123", "127"}, {"134", "234"}, {"145", "345"}, {"156", "456"}, {"126", "156"}, {"125", "145"},
      {"124", "134"}, {"134", "145"}, {"145", "156"}, {"156", "167"}, {"125", "126"}, {"126", "127"},
      {"124", "125"}, {"345", "134"}, {"145", "124"}, {"456", "145"}, {"567", "156"}, {"156", "125"},
      {"167", "126"}, {"123", "124"}};
  std::multiset<std::pair<PluckerIndex, PluckerIndex>> expected, actual;
  for (auto [s, t] : reference) expected.emplace(digits(s, 7), digits(t, 7));
  for (auto [s, t] : seed.quiver().arrow_list()) actual.emplace(seed.label(s), seed.label(t));
  CHECK(actual == expected);

  const std::set<std::string> frozen_labels{"234", "345", "456", "567", "167", "127", "123"};
  for (int v = 1; v <= seed.num_vertices(); ++v) {
    std::string s;
    for (int e : seed.label(v).entries()) s += std::to_string(e);
    CHECK(seed.quiver().is_frozen(v) == (frozen_labels.count(s) == 1));
  }
  CHECK(seed.frozen_arrows().size() == 7);
  CHECK(TriangularSeed(3, 7, false).quiver() == seed.quiver().without_frozen_arrows());
}

TEST_CASE("triangular seed of Gr(4,9): mutable grid and labels") {
  TriangularSeed seed(4, 9);
  CHECK(seed.num_mutable() == 12);
  const std::vector<Arrow> reference{{1, 2},  {2, 3},  {2, 5},  {3, 4},  {3, 6},  {4, 7},  {5, 1},  {5, 6},
                                 {6, 2},  {6, 7},  {6, 9},  {7, 3},  {7, 8},  {7, 10}, {8, 4},  {8, 11},
                                 {9, 5},  {9, 10}, {10, 6}, {10, 11}, {11, 7}, {11, 12}, {12, 8}};
  std::vector<Arrow> expected = reference;
  std::sort(expected.begin(), expected.end());
  CHECK(seed.grid_quiver().arrow_list() == expected);
  const char* rows[3][4] = {{"1345", "1456", "1567", "1678"},
                            {"1245", "1256", "1267", "1278"},
                            {"1235", "1236", "1237", "1238"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) CHECK(seed.label(4 * i + j + 1) == digits(rows[i][j], 9));
  CHECK(seed.vertex(7) == SeedVertex::grid(3, 2));
}

TEST_CASE("triangular seed of Gr(2,4) and range errors") {
  TriangularSeed seed(2, 4);
  CHECK(seed.num_mutable() == 1);
  CHECK(seed.num_vertices() == 5);
  CHECK(seed.label(1) == I("1,3", 4));
  CHECK_THROWS(TriangularSeed(1, 4));
  CHECK_THROWS(TriangularSeed(3, 4));
}

TEST_CASE("seed vertex ids are a bijection") {
  TriangularSeed seed(4, 8);
  std::set<int> ids;
  for (int v = 1; v <= seed.num_vertices(); ++v) {
    CHECK(seed.id(seed.vertex(v)) == v);
    ids.insert(v);
    const SeedVertex& sv = seed.vertex(v);
    if (!sv.is_empty()) CHECK(seed.quiver().is_mutable(v) == (sv.x() <= 3 && sv.y() <= 3));
  }
  CHECK(SeedVertex::parse("3,2") == SeedVertex::grid(3, 2));
  CHECK(SeedVertex::parse("empty").is_empty());
  CHECK_THROWS(SeedVertex::parse("3"));
}

TEST_CASE("g-vector formula for (2,3,5,6,7,14,15,19) in Gr(8,19)") {
  TriangularSeed seed(8, 19);
  const PluckerIndex idx = I("2,3,5,6,7,14,15,19", 19);
  IntVector expected = IntVector::Zero(seed.num_vertices());
  for (const char* plus : {"1,2,3,4,5,6,7,19", "1,2,3,4,5,14,15,16", "1,2,5,6,7,8,9,10", "2,3,4,5,6,7,8,9"})
    expected(*seed.id_of(I(plus, 19)) - 1) += Integer(1);
  for (const char* minus : {"1,2,3,4,5,6,7,16", "1,2,3,4,5,8,9,10", "1,2,4,5,6,7,8,9"})
    expected(*seed.id_of(I(minus, 19)) - 1) -= Integer(1);
  CHECK(g_vector_plucker(idx, seed) == expected);
  CHECK(g_vector_terms(idx).size() == 7);
}

TEST_CASE("g-vector formula on seed labels") {
  for (auto [k, n] : {std::pair{2, 5}, {3, 7}, {4, 9}}) {
    TriangularSeed seed(k, n);
    for (int v = 1; v <= seed.num_vertices(); ++v) {
      IntVector e = IntVector::Zero(seed.num_vertices());
      e(v - 1) = Integer(1);
      CHECK(g_vector_plucker(seed.label(v), seed) == e);
    }
    CHECK(g_vector_terms(PluckerIndex::initial(k, n)) ==
          std::vector<std::pair<SeedVertex, int>>{{SeedVertex::empty(), 1}});
  }
}

TEST_CASE("noncrossing") {
  CHECK_FALSE(noncrossing(I("1,3", 4), I("2,4", 4)));
  CHECK(noncrossing(I("1,3", 4), I("1,3", 4)));
  for (auto [k, n] : {std::pair{2, 6}, {3, 7}}) {
    auto all = all_plucker_indices(k, n);
    for (const auto& a : all)
      for (const auto& b : all) {
        CHECK(noncrossing(a, b) == !crosses_brute(a, b));
        CHECK(noncrossing(a, b) == noncrossing(b, a));
      }
  }
}

TEST_CASE("Plücker clusters") {
  std::vector<PluckerIndex> list;
  for (const char* s : {"234", "345", "456", "567", "134", "145", "156", "167", "124", "125", "126", "127", "123"})
    list.push_back(digits(s, 7));
  CHECK(is_plucker_cluster(list));
  TriangularSeed seed(3, 7);
  std::set<PluckerIndex> seed_labels, listed(list.begin(), list.end());
  for (int v = 1; v <= 13; ++v) seed_labels.insert(seed.label(v));
  CHECK(seed_labels == listed);

  auto shorter = list;
  shorter.pop_back();
  CHECK_FALSE(is_plucker_cluster(shorter));

  std::vector<PluckerIndex> bad{I("1,3", 4), I("2,4", 4), I("1,2", 4), I("2,3", 4), I("3,4", 4)};
  CHECK_FALSE(is_plucker_cluster(bad));
  std::vector<PluckerIndex> good{I("1,3", 4), I("1,4", 4), I("1,2", 4), I("2,3", 4), I("3,4", 4)};
  CHECK(is_plucker_cluster(good));
}

TEST_CASE("rank-one profiles and projectives") {
  CHECK(jks_profile(I("1,2,3", 7)).projective);
  CHECK_FALSE(jks_profile(I("1,3", 4)).projective);
  CHECK(jks_profile(I("1,7", 7)).projective);

  // Rim heights of the rank-one module for (2,3,5,6,7,14,15,19).
  JksProfile p = jks_profile(I("2,3,5,6,7,14,15,19", 19));
  CHECK(p.heights == std::vector<int>{3, 4, 3, 2, 3, 2, 1, 0, 1, 2, 3, 4, 5, 6, 5, 4, 5, 6, 7, 6});
  CHECK(p.x_is_t[1]);
  CHECK_FALSE(p.y_is_t[1]);
  CHECK(p.y_is_t[0]);

  for (auto [k, n] : {std::pair{2, 6}, {3, 7}, {4, 9}})
    for (const auto& idx : all_plucker_indices(k, n)) {
      YoungDiagram y = young_diagram(idx);
      auto rect = y.rectangle();
      const bool shape = y.is_empty() || (rect && (rect->first == k || rect->second == n - k));
      CHECK(is_cyclic_interval(idx) == shape);
    }
}
