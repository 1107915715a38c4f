#include "cli.hpp"

#include "grassdt/dt.hpp"
#include "grassdt/oracle.hpp"
#include "grassdt/server.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

namespace grassdt {

using nlohmann::json;

namespace {

constexpr int kOk = 0, kMismatch = 1, kUsage = 2;
constexpr int kMaxMutationGrid = 40;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("bad vertex '" + item + "' in word");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void check_kn(int k, int n) {
  if (k < 2 || n - k < 2) throw UsageError("need 2 <= k <= n-2");
}

void check_mutation_size(int k, int n) {
  if ((k - 1) * (n - k - 1) > kMaxMutationGrid)
    throw std::length_error("grid too large for mutation (more than " + std::to_string(kMaxMutationGrid) + " vertices)");
}

// Finite-type Grassmannians, where the exchange graph is finite.
bool finite_type(int k, int n) {
  const int small = std::min(k, n - k);
  return small <= 2 || (small == 3 && n <= 8);
}

std::string matrix_text(const IntMatrix& m) {
  std::string out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    out += "  [" + std::to_string(j + 1) + "]";
    for (Eigen::Index i = 0; i < m.rows(); ++i) out += " " + m(i, j).str();
    out += "\n";
  }
  return out;
}

struct Options {
  bool json = false;
  std::uint64_t rng_seed = 1;
};

int cmd_seed(const Options& o, int k, int n, std::ostream& out) {
  check_kn(k, n);
  const TriangularSeed seed(k, n);
  const IceQuiver& q = seed.quiver();
  if (o.json) {
    json verts = json::array();
    for (int v = 1; v <= q.num_vertices(); ++v)
      verts.push_back({{"id", v}, {"vertex", seed.vertex(v).str()}, {"plucker", seed.label(v).str()}, {"mutable", q.is_mutable(v)}});
    out << json{{"k", k}, {"n", n}, {"quiver", to_json(q)}, {"vertices", verts}}.dump() << "\n";
    return kOk;
  }
  out << "Gr(" << k << "," << n << ") triangular seed: " << q.num_vertices() << " vertices, " << q.num_mutable()
      << " mutable\n";
  for (int v = 1; v <= q.num_vertices(); ++v)
    out << "  " << v << "  " << seed.vertex(v).str() << "  p_" << seed.label(v).str() << (q.is_frozen(v) ? "  frozen" : "")
        << "\n";
  out << "arrows:";
  for (auto [s, t] : q.arrow_list()) out << " " << s << "->" << t;
  out << "\n";
  return kOk;
}

int cmd_gvector(const Options& o, int k, int n, const std::string& index, std::ostream& out) {
  check_kn(k, n);
  const json rep = gvector_report(k, n, index);
  if (o.json) {
    out << rep.dump() << "\n";
    return kOk;
  }
  out << "g(p_" << rep["index"].get<std::string>() << ") =\n";
  for (const auto& t : rep["terms"])
    out << "  " << (t["coefficient"].get<int>() > 0 ? "+" : "-") << " e_" << t["id"].get<int>() << "  vertex "
        << t["vertex"].get<std::string>() << "  p_" << t["plucker"].get<std::string>() << "\n";
  return kOk;
}

std::pair<int, int> parse_vertex(const std::string& text) {
  const auto v = parse_word(text);
  if (v.size() != 2) throw UsageError("vertex must be 'p,q'");
  return {v[0], v[1]};
}

int cmd_dtf(const Options& o, int k, int n, const std::string& vertex, const std::string& method, std::ostream& out) {
  check_kn(k, n);
  const TriangularSeed seed(k, n);
  std::vector<std::pair<int, int>> targets;
  if (!vertex.empty()) {
    targets.push_back(parse_vertex(vertex));
    weng_box(k, n, targets[0].first, targets[0].second);  // range check
  } else {
    for (int v = 1; v <= seed.num_mutable(); ++v) targets.emplace_back(seed.vertex(v).x(), seed.vertex(v).y());
  }

  std::optional<GreenSeqReport> red;
  if (method != "closed") {
    check_mutation_size(k, n);
    red = run_reddening(seed.grid_quiver(), rectangular_sweep_sequence(k, n));
    if (!red->is_reddening) {
      out << "sweep is not a reddening sequence for Gr(" << k << "," << n << ")\n";
      return kMismatch;
    }
  }

  bool all_match = true;
  json reports = json::array();
  for (auto [p, q] : targets) {
    const BoxPoset b = weng_box(k, n, p, q);
    const int id = seed.id(SeedVertex::grid(p, q));
    std::optional<Poly> closed, mutation;
    if (method != "mutation") closed = dtf_closed_form(k, n, p, q);
    if (red) mutation = red->dtf[id - 1];
    const Poly& shown = closed ? *closed : *mutation;
    json rep{{"vertex", {p, q}}, {"box", {b.r, b.s, b.t}}, {"terms", shown.num_terms()}, {"poly", to_string(shown)}};
    const bool both = closed && mutation;
    if (both) {
      rep["match"] = *closed == *mutation;
      all_match = all_match && *closed == *mutation;
      if (!(*closed == *mutation)) rep["mutation_poly"] = to_string(*mutation);
    }
    if (o.json) {
      reports.push_back(rep);
      continue;
    }
    out << "vertex " << p << "," << q << "  box " << b.r << "x" << b.s << "x" << b.t << "  terms " << shown.num_terms() << "\n";
    if (closed) out << "closed:   " << to_string(*closed) << "\n";
    if (mutation) out << "mutation: " << to_string(*mutation) << "\n";
    if (both) out << (*closed == *mutation ? "MATCH" : "MISMATCH") << "\n";
  }
  if (o.json) out << (vertex.empty() ? reports : reports[0]).dump() << "\n";
  return all_match ? kOk : kMismatch;
}

int cmd_greenseq(const Options& o, int k, int n, const std::string& strategy, int max_steps, std::ostream& out) {
  check_kn(k, n);
  check_mutation_size(k, n);
  const IceQuiver q = TriangularSeed(k, n).grid_quiver();
  std::vector<int> word;
  if (strategy == "sweep") {
    word = rectangular_sweep_sequence(k, n);
  } else {
    auto found = greedy_green_search(q, max_steps);
    if (!found) {
      if (o.json) out << json{{"found", false}}.dump() << "\n";
      else out << "no reddening sequence within " << max_steps << " steps\n";
      return kMismatch;
    }
    word = *found;
  }
  const GreenSeqReport rep = run_reddening(q, word);
  if (o.json) {
    out << json{{"found", true},
                {"word", rep.word},
                {"all_steps_green", rep.all_steps_green},
                {"is_reddening", rep.is_reddening},
                {"sigma", rep.sigma ? json(*rep.sigma) : json(nullptr)}}
               .dump()
        << "\n";
  } else {
    out << "word (" << word.size() << " steps): " << join(word) << "\n";
    out << "all steps green: " << (rep.all_steps_green ? "yes" : "no") << "\n";
    out << "reddening: " << (rep.is_reddening ? "yes" : "no") << "\n";
    if (rep.sigma) out << "sigma: " << join(*rep.sigma) << "\n";
  }
  return rep.is_reddening ? kOk : kMismatch;
}

int cmd_mutate(const Options& o, const std::string& file, const std::string& word_text, bool no_f, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open quiver file '" + file + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("quiver file is not JSON: ") + e.what());
  }
  const IceQuiver q = quiver_from_json(j);
  const std::vector<int> word = parse_word(word_text);
  for (int v : word)
    if (v < 1 || v > q.num_vertices()) throw UsageError("vertex out of range in word: " + std::to_string(v));
  const TrackedSeed s = mutate_tracked(initial_tracked(q, !no_f), word);
  json colors = json::array();
  for (int v = 1; v <= s.num_vertices(); ++v)
    colors.push_back(s.quiver.is_frozen(v) ? "frozen" : to_string(vertex_color(s, v)));
  const auto sigma = red_permutation(s);
  if (o.json) {
    json f = nullptr;
    if (!no_f) {
      f = json::array();
      for (const Poly& p : s.fpolys) f.push_back(to_string(p));
    }
    out << json{{"quiver", to_json(s.quiver)}, {"colors", colors}, {"g_matrix", columns_json(s.gmatrix)},
                {"c_matrix", columns_json(s.cmatrix)}, {"f_polys", f}, {"history", s.history},
                {"all_red", sigma.has_value()}, {"sigma", sigma ? json(*sigma) : json(nullptr)}}
               .dump()
        << "\n";
    return kOk;
  }
  out << "word: " << join(word) << "\n";
  out << "colors:";
  for (const auto& c : colors) out << " " << c.get<std::string>();
  out << "\nG columns:\n" << matrix_text(s.gmatrix) << "C columns:\n" << matrix_text(s.cmatrix);
  if (!no_f) {
    out << "F:\n";
    for (int i = 0; i < s.num_mutable(); ++i) out << "  F" << i + 1 << " = " << to_string(s.fpolys[i]) << "\n";
  }
  if (sigma) out << "all red, sigma: " << join(*sigma) << "\n";
  return kOk;
}

int cmd_validate_gvectors(const Options& o, int k, int n, int max_clusters, std::ostream& out) {
  check_kn(k, n);
  if (!finite_type(k, n)) throw std::length_error("exchange graph of Gr(" + std::to_string(k) + "," + std::to_string(n) + ") is infinite");
  BfsOptions opt;
  opt.rng_seed = o.rng_seed;
  opt.max_clusters = max_clusters;
  const BfsResult res = bfs_exchange_graph(k, n, opt);
  const TriangularSeed seed(k, n);
  json mismatched = json::array();
  int checked = 0, matched = 0;
  for (const auto& idx : all_plucker_indices(k, n)) {
    ++checked;
    auto it = res.gvectors.find(idx);
    if (it == res.gvectors.end()) {
      mismatched.push_back({{"index", idx.str()}, {"reason", "not found"}});
      continue;
    }
    if (it->second == g_vector_plucker(idx, seed)) {
      ++matched;
    } else {
      json tracked = json::array();
      for (const Integer& x : it->second) tracked.push_back(x.to_int64());
      mismatched.push_back({{"index", idx.str()}, {"reason", "g-vector differs"}, {"tracked", tracked}});
    }
  }
  for (const auto& p : res.problems) mismatched.push_back({{"reason", p}});
  out << json{{"checked", checked}, {"matched", matched}, {"mismatched", mismatched}, {"clusters", res.clusters},
              {"complete", res.complete}, {"rng_seed", o.rng_seed}}
             .dump()
      << "\n";
  return mismatched.empty() ? kOk : kMismatch;
}

int cmd_validate_dtf(const Options& o, int k, int n, std::ostream& out) {
  (void)o;
  check_kn(k, n);
  check_mutation_size(k, n);
  const TriangularSeed seed(k, n);
  const GreenSeqReport red = run_reddening(seed.grid_quiver(), rectangular_sweep_sequence(k, n));
  json mismatched = json::array();
  int checked = 0, matched = 0;
  if (!red.is_reddening) mismatched.push_back({{"reason", "sweep is not a reddening sequence"}});
  for (int v = 1; red.is_reddening && v <= seed.num_mutable(); ++v) {
    const SeedVertex g = seed.vertex(v);
    const Poly closed = dtf_closed_form(k, n, g.x(), g.y());
    ++checked;
    if (closed == red.dtf[v - 1]) {
      ++matched;
    } else {
      mismatched.push_back({{"vertex", {g.x(), g.y()}}, {"closed", to_string(closed)}, {"mutation", to_string(red.dtf[v - 1])}});
    }
  }
  out << json{{"checked", checked}, {"matched", matched}, {"mismatched", mismatched},
              {"all_steps_green", red.all_steps_green}}
             .dump()
      << "\n";
  return mismatched.empty() ? kOk : kMismatch;
}

int cmd_serve(const std::string& host, int port, std::ostream& out) {
  SessionStore store;
  SessionServer server(store);
  out << "listening on " << host << ":" << port << std::endl;
  if (!server.listen(host, port)) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster mutation, g-vectors and DT F-polynomials for Grassmannians", "grassdt"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--rng-seed", o.rng_seed, "Seed for randomized checks")->capture_default_str();

  int k = 0, n = 0;
  auto kn = [&](CLI::App* sub) {
    sub->add_option("--k", k, "k of Gr(k,n)")->required();
    sub->add_option("--n", n, "n of Gr(k,n)")->required();
    sub->fallthrough();
  };

  auto* seed = app.add_subcommand("seed", "Print the triangular seed");
  kn(seed);

  std::string index;
  auto* gvec = app.add_subcommand("gvector", "g-vector of a Plücker coordinate from peaks and valleys");
  kn(gvec);
  gvec->add_option("--index", index, "Plücker index, e.g. 2,3,5")->required();

  std::string vertex, method = "closed";
  auto* dtf = app.add_subcommand("dtf", "DT F-polynomials");
  kn(dtf);
  dtf->add_option("--vertex", vertex, "Grid vertex p,q (default: all)");
  dtf->add_option("--method", method, "closed, mutation or both")
      ->check(CLI::IsMember({"closed", "mutation", "both"}))
      ->capture_default_str();

  std::string strategy = "sweep";
  int max_steps = 10000;
  auto* green = app.add_subcommand("greenseq", "Run a reddening sequence on the grid quiver");
  kn(green);
  green->add_option("--strategy", strategy, "sweep or greedy")->check(CLI::IsMember({"sweep", "greedy"}))->capture_default_str();
  green->add_option("--max-steps", max_steps, "Greedy step budget")->capture_default_str();

  std::string quiver_file, word_text;
  bool no_f = false;
  auto* mut = app.add_subcommand("mutate", "Tracked mutation of a quiver given as JSON");
  mut->add_option("--quiver", quiver_file, "Quiver JSON file")->required();
  mut->add_option("--word", word_text, "Applied-order word, e.g. 1,2,3");
  mut->add_flag("--no-f", no_f, "Skip F-polynomials");
  mut->fallthrough();

  int max_clusters = 100000;
  auto* validate = app.add_subcommand("validate", "Cross-check closed formulas against mutation");
  validate->require_subcommand(1);
  auto* vg = validate->add_subcommand("gvectors", "Exchange-graph search vs the peaks/valleys formula");
  kn(vg);
  vg->add_option("--max-clusters", max_clusters, "Cluster budget")->capture_default_str();
  auto* vd = validate->add_subcommand("dtf", "Sweep DTF vs the closed form");
  kn(vd);
  validate->fallthrough();

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Start the session HTTP service");
  serve->add_option("--port", port, "Port")->capture_default_str();
  serve->add_option("--host", host, "Interface")->capture_default_str();
  serve->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*seed) return cmd_seed(o, k, n, out);
    if (*gvec) return cmd_gvector(o, k, n, index, out);
    if (*dtf) return cmd_dtf(o, k, n, vertex, method, out);
    if (*green) return cmd_greenseq(o, k, n, strategy, max_steps, out);
    if (*mut) return cmd_mutate(o, quiver_file, word_text, no_f, out);
    if (*vg) return cmd_validate_gvectors(o, k, n, max_clusters, out);
    if (*vd) return cmd_validate_dtf(o, k, n, out);
    if (*serve) return cmd_serve(host, port, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    err << "size limit: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace grassdt
