#include "grassdt/grassmann.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace grassdt {

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("expected an integer in '" + std::string(context) + "'");
  return v;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    out.push_back(parse_int(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos), text));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

PluckerIndex::PluckerIndex(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  const int k = static_cast<int>(entries_.size());
  if (k < 1 || k >= n) throw std::invalid_argument("Plücker index needs 0 < k < n");
  for (int i = 0; i < k; ++i) {
    if (entries_[i] < 1 || entries_[i] > n) throw std::invalid_argument("Plücker index entry out of range");
    if (i > 0 && entries_[i] <= entries_[i - 1])
      throw std::invalid_argument("Plücker index must be strictly increasing");
  }
}

PluckerIndex PluckerIndex::parse(std::string_view text, int n) { return PluckerIndex(n, parse_int_list(text)); }

PluckerIndex PluckerIndex::initial(int k, int n) {
  std::vector<int> e(k);
  std::iota(e.begin(), e.end(), 1);
  return PluckerIndex(n, e);
}

bool PluckerIndex::contains(int i) const { return std::binary_search(entries_.begin(), entries_.end(), i); }

std::string PluckerIndex::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::vector<PluckerIndex> all_plucker_indices(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("need 0 < k < n");
  std::vector<PluckerIndex> out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(n, cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int YoungDiagram::num_boxes() const { return std::accumulate(rows.begin(), rows.end(), 0); }

bool YoungDiagram::has_box(int row, int col) const {
  return row >= 1 && row <= static_cast<int>(rows.size()) && col >= 1 && col <= rows[row - 1];
}

std::optional<std::pair<int, int>> YoungDiagram::rectangle() const {
  if (is_empty()) return std::nullopt;
  const int width = rows.front();
  int height = 0;
  while (height < static_cast<int>(rows.size()) && rows[height] == width) ++height;
  for (int i = height; i < static_cast<int>(rows.size()); ++i)
    if (rows[i] != 0) return std::nullopt;
  return std::make_pair(height, width);
}

YoungDiagram young_diagram(const PluckerIndex& index) {
  const int k = index.k();
  YoungDiagram y;
  y.max_columns = index.n() - k;
  for (int i = 1; i <= k; ++i) y.rows.push_back(index.entries()[k - i] - (k - i + 1));
  return y;
}

PeaksValleys peaks_valleys(const YoungDiagram& y) {
  if (y.is_empty()) throw std::invalid_argument("no boxes");
  PeaksValleys out;
  const int k = static_cast<int>(y.rows.size());
  for (int i = 1; i <= k; ++i) {
    const int len = y.rows[i - 1];
    if (len == 0) continue;
    if (!y.has_box(i + 1, len)) out.peaks.push_back({i, len});
    for (int j = 1; j < len; ++j)
      if (y.has_box(i + 1, j) && !y.has_box(i + 1, j + 1)) out.valleys.push_back({i, j});
  }
  return out;
}

SeedVertex SeedVertex::parse(std::string_view text) {
  if (text == "empty") return empty();
  auto v = parse_int_list(text);
  if (v.size() != 2 || v[0] < 1 || v[1] < 1) throw std::invalid_argument("expected 'empty' or 'x,y'");
  return grid(v[0], v[1]);
}

std::string SeedVertex::str() const {
  return is_empty() ? std::string("empty") : std::to_string(x_) + "," + std::to_string(y_);
}

PluckerIndex rectangle_to_plucker(int rows, int cols, int k, int n) {
  if (k < 1 || k >= n || rows < 1 || rows > k || cols < 1 || cols > n - k)
    throw std::out_of_range("rectangle out of range");
  std::vector<int> e;
  for (int i = 1; i <= k - rows; ++i) e.push_back(i);
  for (int i = k - rows + 1 + cols; i <= k + cols; ++i) e.push_back(i);
  return PluckerIndex(n, e);
}

std::optional<std::pair<int, int>> plucker_rectangle_shape(const PluckerIndex& index) {
  return young_diagram(index).rectangle();
}

TriangularSeed::TriangularSeed(int k, int n, bool with_frozen_arrows) : k_(k), n_(n) {
  if (k < 2 || n - k < 2) throw std::invalid_argument("triangular seed needs 2 <= k <= n-2");
  const int w = n - k;  // grid columns including the frozen one
  const int m = k * w + 1;
  const int r = (k - 1) * (w - 1);
  vertices_.resize(m, SeedVertex::empty());
  for (int y = 1; y <= k; ++y)
    for (int x = 1; x <= w; ++x) vertices_[id(SeedVertex::grid(x, y)) - 1] = SeedVertex::grid(x, y);
  for (const auto& v : vertices_)
    labels_.push_back(v.is_empty() ? PluckerIndex::initial(k, n) : rectangle_to_plucker(v.y(), v.x(), k, n));

  std::vector<Arrow> arrows;
  auto add = [&](SeedVertex s, SeedVertex t) {
    const int a = id(s), b = id(t);
    const bool frozen = a > r && b > r;
    if (frozen) {
      if (!with_frozen_arrows) return;
      frozen_arrows_.emplace_back(a, b);
    }
    arrows.emplace_back(a, b);
  };
  for (int y = 1; y <= k; ++y)
    for (int x = 1; x <= w - 1; ++x) add(SeedVertex::grid(x, y), SeedVertex::grid(x + 1, y));
  for (int y = 1; y <= k - 1; ++y)
    for (int x = 1; x <= w; ++x) add(SeedVertex::grid(x, y), SeedVertex::grid(x, y + 1));
  for (int y = 1; y <= k - 1; ++y)
    for (int x = 1; x <= w - 1; ++x) add(SeedVertex::grid(x + 1, y + 1), SeedVertex::grid(x, y));
  add(SeedVertex::empty(), SeedVertex::grid(1, 1));
  add(SeedVertex::empty(), SeedVertex::grid(1, k));
  add(SeedVertex::empty(), SeedVertex::grid(w, 1));
  quiver_ = IceQuiver(m, r, arrows);
}

int TriangularSeed::id(const SeedVertex& v) const {
  const int w = n_ - k_, r = (k_ - 1) * (w - 1);
  if (v.is_empty()) return k_ * w + 1;
  const int x = v.x(), y = v.y();
  if (x < 1 || x > w || y < 1 || y > k_) throw std::out_of_range("grid vertex out of range: " + v.str());
  if (x < w && y < k_) return (w - 1) * (k_ - 1 - y) + x;
  if (y == k_) return r + x;
  return r + w + (k_ - y);
}

std::optional<int> TriangularSeed::id_of(const PluckerIndex& index) const {
  auto it = std::find(labels_.begin(), labels_.end(), index);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin()) + 1;
}

std::vector<std::pair<SeedVertex, int>> g_vector_terms(const PluckerIndex& index) {
  const YoungDiagram y = young_diagram(index);
  if (y.is_empty()) return {{SeedVertex::empty(), 1}};
  const PeaksValleys pv = peaks_valleys(y);
  std::vector<std::pair<SeedVertex, int>> out;
  for (const Box& b : pv.peaks) out.emplace_back(SeedVertex::grid(b.col, b.row), 1);
  for (const Box& b : pv.valleys) out.emplace_back(SeedVertex::grid(b.col, b.row), -1);
  return out;
}

IntVector g_vector_plucker(const PluckerIndex& index, const TriangularSeed& seed) {
  if (index.k() != seed.k() || index.n() != seed.n()) throw std::invalid_argument("index does not match the seed");
  IntVector g = IntVector::Zero(seed.num_vertices());
  for (const auto& [v, c] : g_vector_terms(index)) g(seed.id(v) - 1) += Integer(c);
  return g;
}

bool noncrossing(const PluckerIndex& a, const PluckerIndex& b) {
  if (a.n() != b.n() || a.k() != b.k()) throw std::invalid_argument("noncrossing: indices of different shape");
  // Walk {1..n} and count runs of the symmetric difference colored by side;
  // a crossing is exactly four or more linear runs.
  int runs = 0, last = 0;
  for (int i = 1; i <= a.n(); ++i) {
    const bool ia = a.contains(i), ib = b.contains(i);
    if (ia == ib) continue;
    const int side = ia ? 1 : 2;
    if (side != last) ++runs;
    last = side;
  }
  return runs < 4;
}

bool is_plucker_cluster(const std::vector<PluckerIndex>& indices) {
  if (indices.empty()) return false;
  const int k = indices.front().k(), n = indices.front().n();
  std::set<PluckerIndex> distinct(indices.begin(), indices.end());
  if (distinct.size() != indices.size()) return false;
  if (static_cast<int>(indices.size()) != k * (n - k) + 1) return false;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i].k() != k || indices[i].n() != n) throw std::invalid_argument("mixed (k, n) in cluster");
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      if (!noncrossing(indices[i], indices[j])) return false;
  }
  return true;
}

bool is_cyclic_interval(const PluckerIndex& index) {
  const int n = index.n(), k = index.k();
  // Exactly one i in I whose cyclic predecessor is not in I.
  int starts = 0;
  for (int i : index.entries()) {
    const int prev = i == 1 ? n : i - 1;
    if (!index.contains(prev)) ++starts;
  }
  return starts == 1 || k == n;
}

JksProfile jks_profile(const PluckerIndex& index) {
  const int n = index.n();
  JksProfile p;
  p.heights.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const bool in = index.contains(i);
    p.x_is_t.push_back(in);
    p.y_is_t.push_back(!in);
    p.heights[i] = p.heights[i - 1] + (in ? -1 : 1);
  }
  const int lowest = *std::min_element(p.heights.begin(), p.heights.end());
  for (int& h : p.heights) h -= lowest;
  p.projective = is_cyclic_interval(index);
  return p;
}

}  // namespace grassdt
