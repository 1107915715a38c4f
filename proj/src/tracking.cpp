#include "grassdt/tracking.hpp"

namespace grassdt {

const char* to_string(Color c) { return c == Color::Green ? "green" : "red"; }

TrackedSeed initial_tracked(const IceQuiver& q, bool track_f) {
  const int m = q.num_vertices(), r = q.num_mutable();
  TrackedSeed s;
  s.quiver = q;
  s.cmatrix = IntMatrix::Identity(r, r);
  s.gmatrix = IntMatrix::Identity(m, m);
  s.tracks_f = track_f;
  if (track_f) s.fpolys.assign(r, Poly::one(r));
  return s;
}

Color vertex_color(const TrackedSeed& s, int k) {
  if (k < 1 || k > s.num_vertices()) throw std::out_of_range("vertex out of range: " + std::to_string(k));
  if (!s.quiver.is_mutable(k)) throw FrozenVertexError(k);
  const int sign = coherent_sign(s.cmatrix.col(k - 1));
  if (sign == 0) throw SignCoherenceError("c-vector of vertex " + std::to_string(k));
  return sign > 0 ? Color::Green : Color::Red;
}

std::vector<Color> vertex_colors(const TrackedSeed& s) {
  std::vector<Color> out;
  for (int k = 1; k <= s.num_mutable(); ++k) out.push_back(vertex_color(s, k));
  return out;
}

bool all_red(const TrackedSeed& s) {
  for (int k = 1; k <= s.num_mutable(); ++k)
    if (vertex_color(s, k) == Color::Green) return false;
  return true;
}

namespace {

unsigned as_exponent(long long v) { return static_cast<unsigned>(std::max(v, 0LL)); }

// F_k(t') from the exchange relation with coefficients read off c_k(t).
Poly mutate_f(const TrackedSeed& s, int k) {
  const int r = s.num_mutable();
  Poly::Exponents plus(r, 0), minus(r, 0);
  for (int j = 0; j < r; ++j) {
    const long long c = s.cmatrix(j, k - 1).to_int64();
    if (c > 0) plus[j] = static_cast<std::uint32_t>(c);
    if (c < 0) minus[j] = static_cast<std::uint32_t>(-c);
  }
  Poly in = Poly::monomial(plus), out = Poly::monomial(minus);
  for (int i = 1; i <= r; ++i) {
    if (i == k) continue;
    const long long b = s.quiver.arrows(i, k) - s.quiver.arrows(k, i);
    if (b > 0) in *= s.fpolys[i - 1].pow(as_exponent(b));
    if (b < 0) out *= s.fpolys[i - 1].pow(as_exponent(-b));
  }
  return (in + out).divide_exact(s.fpolys[k - 1]);
}

}  // namespace

TrackedSeed mutate_tracked(const TrackedSeed& s, int k) {
  if (k < 1 || k > s.num_vertices()) throw std::out_of_range("vertex out of range: " + std::to_string(k));
  if (!s.quiver.is_mutable(k)) throw FrozenVertexError(k);
  const int r = s.num_mutable();
  const int eps = vertex_color(s, k) == Color::Green ? 1 : -1;

  TrackedSeed out;
  out.tracks_f = s.tracks_f;

  // [B; C] mutates as one matrix; only the principal part of B enters the C rows.
  IntMatrix stacked(2 * r, r);
  stacked << exchange_matrix<Integer>(s.quiver).topRows(r), s.cmatrix;
  out.cmatrix = matrix_mutation(stacked, k - 1).bottomRows(r);

  out.gmatrix = s.gmatrix * e_matrix<Integer>(s.quiver, k, eps);

  if (s.tracks_f) {
    out.fpolys = s.fpolys;
    out.fpolys[k - 1] = mutate_f(s, k);
  }
  out.quiver = mutate(s.quiver, k);
  out.history = s.history;
  out.history.push_back(k);
  return out;
}

TrackedSeed mutate_tracked(const TrackedSeed& s, const std::vector<int>& word) {
  TrackedSeed out = s;
  for (int k : word) out = mutate_tracked(out, k);
  return out;
}

IntMatrix rebase_along(const IceQuiver& start, const std::vector<int>& word) {
  std::vector<IceQuiver> quivers{start};
  for (int k : word) quivers.push_back(mutate(quivers.back(), k));
  const int m = start.num_vertices();
  IntMatrix g = IntMatrix::Identity(m, m);
  for (std::size_t j = word.size(); j-- > 0;) g = rebase_g(g, quivers[j], word[j]);
  return g;
}

bool check_duality(const TrackedSeed& s) {
  const int r = s.num_mutable();
  const IntMatrix prod = s.cmatrix.transpose() * s.mutable_gmatrix();
  return prod == IntMatrix::Identity(r, r);
}

std::vector<std::string> invariant_violations(const TrackedSeed& s) {
  std::vector<std::string> out;
  const int r = s.num_mutable();
  const IntMatrix g = s.mutable_gmatrix();
  for (int i = 0; i < r; ++i) {
    if (coherent_sign(s.cmatrix.col(i)) == 0)
      out.push_back("c-vector " + std::to_string(i + 1) + " not sign-coherent");
    if (coherent_sign(g.row(i)) == 0) out.push_back("G row " + std::to_string(i + 1) + " not sign-coherent");
  }
  if (!check_duality(s)) out.push_back("C^T G != I");
  const Integer det = determinant(s.gmatrix);
  if (!(abs(det) == Integer(1))) out.push_back("det G = " + det.str());
  if (s.tracks_f) {
    for (int i = 0; i < r; ++i) {
      const Poly& f = s.fpolys[i];
      if (!(f.constant_term() == Integer(1)))
        out.push_back("F" + std::to_string(i + 1) + " constant term != 1");
      if (!f.has_positive_coefficients())
        out.push_back("F" + std::to_string(i + 1) + " has a non-positive coefficient");
    }
  }
  return out;
}

nlohmann::json columns_json(const IntMatrix& m) {
  nlohmann::json cols = nlohmann::json::array();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    nlohmann::json col = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) col.push_back(m(i, j).to_int64());
    cols.push_back(col);
  }
  return cols;
}

}  // namespace grassdt
