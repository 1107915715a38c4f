#include "doctest.h"

#include "cli.hpp"
#include "grassdt/dt.hpp"
#include "grassdt/session.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace grassdt;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/grassdt_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("cli seed") {
  Run r = run({"seed", "--k", "2", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("5 vertices, 1 mutable") != std::string::npos);

  Run j = run({"seed", "--k", "3", "--n", "7", "--json"});
  REQUIRE(j.code == 0);
  json parsed = json::parse(j.out);
  CHECK(quiver_from_json(parsed["quiver"]) == TriangularSeed(3, 7).quiver());
  CHECK(parsed["vertices"].size() == 13);
}

TEST_CASE("cli gvector") {
  Run r = run({"gvector", "--k", "8", "--n", "19", "--index", "2,3,5,6,7,14,15,19"});
  CHECK(r.code == 0);
  for (const char* label : {"p_1,2,3,4,5,6,7,19", "p_1,2,3,4,5,14,15,16", "p_1,2,5,6,7,8,9,10", "p_2,3,4,5,6,7,8,9",
                            "p_1,2,3,4,5,6,7,16", "p_1,2,3,4,5,8,9,10", "p_1,2,4,5,6,7,8,9"})
    CHECK(r.out.find(label) != std::string::npos);
  Run j = run({"gvector", "--k", "8", "--n", "19", "--index", "2,3,5,6,7,14,15,19", "--json"});
  CHECK(json::parse(j.out) == gvector_report(8, 19, "2,3,5,6,7,14,15,19"));
  CHECK(run({"gvector", "--k", "3", "--n", "7", "--index", "1,2,9"}).code == 2);
}

TEST_CASE("cli dtf") {
  Run r = run({"dtf", "--k", "4", "--n", "9", "--vertex", "3,2", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out.find("terms 20") != std::string::npos);
  CHECK(r.out.find("MATCH") != std::string::npos);
  CHECK(r.out.find("MISMATCH") == std::string::npos);

  Run j = run({"dtf", "--k", "4", "--n", "9", "--vertex", "3,2", "--json"});
  REQUIRE(j.code == 0);
  json d = json::parse(j.out);
  CHECK(d == dtf_report(4, 9, 3, 2));
  CHECK(parse_poly(d["poly"].get<std::string>(), 12) == dtf_closed_form(4, 9, 3, 2));

  Run all = run({"dtf", "--k", "3", "--n", "6", "--method", "both", "--json"});
  REQUIRE(all.code == 0);
  json arr = json::parse(all.out);
  CHECK(arr.size() == 4);
  for (const auto& e : arr) CHECK(e["match"] == true);

  CHECK(run({"dtf", "--k", "4", "--n", "9", "--vertex", "9,9"}).code == 2);
  CHECK(run({"dtf", "--k", "4", "--n", "9", "--method", "magic"}).code == 2);
  Run huge = run({"dtf", "--k", "8", "--n", "16", "--vertex", "3,3"});
  CHECK(huge.code == 2);
  CHECK(huge.err.find("box too large") != std::string::npos);
  CHECK(run({"dtf", "--k", "8", "--n", "16", "--method", "mutation"}).code == 2);
}

TEST_CASE("cli greenseq") {
  Run sweep = run({"greenseq", "--k", "4", "--n", "9", "--json"});
  REQUIRE(sweep.code == 0);
  json s = json::parse(sweep.out);
  CHECK(s["word"] == json(rectangular_sweep_sequence(4, 9)));
  CHECK(s["all_steps_green"] == true);
  CHECK(s["sigma"] == json({4, 3, 2, 1, 8, 7, 6, 5, 12, 11, 10, 9}));

  Run greedy = run({"greenseq", "--k", "3", "--n", "7", "--strategy", "greedy"});
  CHECK(greedy.code == 0);
  CHECK(greedy.out.find("reddening: yes") != std::string::npos);
  CHECK(run({"greenseq", "--k", "3", "--n", "7", "--strategy", "greedy", "--max-steps", "1"}).code == 1);
}

TEST_CASE("cli mutate") {
  const std::string path = temp_file("a3.json", R"({"num_vertices": 3, "num_mutable": 3, "arrows": [[1,2],[2,3]]})");
  Run r = run({"mutate", "--quiver", path, "--word", "1,2,3,1,2,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("F3 = 1 + y1 + y1*y2 + y1*y2*y3") != std::string::npos);
  CHECK(r.out.find("all red, sigma: 3,2,1") != std::string::npos);

  Run j = run({"mutate", "--quiver", path, "--word", "1", "--json"});
  REQUIRE(j.code == 0);
  json out = json::parse(j.out);
  CHECK(out["colors"] == json({"red", "green", "green"}));
  CHECK(out["g_matrix"][0] == json({-1, 1, 0}));

  CHECK(run({"mutate", "--quiver", "/nonexistent.json", "--word", "1"}).code == 2);
  CHECK(run({"mutate", "--quiver", path, "--word", "1,x"}).code == 2);
  CHECK(run({"mutate", "--quiver", path, "--word", "7"}).code == 2);
  const std::string bad = temp_file("loop.json", R"({"num_vertices": 2, "num_mutable": 2, "arrows": [[1,1]]})");
  CHECK(run({"mutate", "--quiver", bad, "--word", "1"}).code == 2);
  std::remove(path.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("cli validate") {
  Run g = run({"validate", "gvectors", "--k", "2", "--n", "5", "--rng-seed", "9"});
  CHECK(g.code == 0);
  json rep = json::parse(g.out);
  CHECK(rep["checked"] == 10);
  CHECK(rep["matched"] == 10);
  CHECK(rep["mismatched"].empty());
  CHECK(run({"validate", "gvectors", "--k", "2", "--n", "5", "--rng-seed", "9"}).out == g.out);

  Run partial = run({"validate", "gvectors", "--k", "3", "--n", "6", "--max-clusters", "2"});
  CHECK(partial.code == 1);
  CHECK(json::parse(partial.out)["complete"] == false);

  CHECK(run({"validate", "gvectors", "--k", "4", "--n", "8"}).code == 2);

  Run d = run({"validate", "dtf", "--k", "3", "--n", "7"});
  CHECK(d.code == 0);
  json drep = json::parse(d.out);
  CHECK(drep["checked"] == 6);
  CHECK(drep["matched"] == 6);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"seed", "--k", "2", "--n", "4", "--bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"seed", "--k", "1", "--n", "4"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("greenseq") != std::string::npos);
}
