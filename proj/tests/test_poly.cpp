#include "doctest.h"

#include "grassdt/poly.hpp"

#include <random>

using namespace grassdt;

namespace {

Poly P(const char* text, int vars) { return parse_poly(text, vars); }

Poly random_poly(std::mt19937& rng, int vars, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), exp(0, 2), coeff(-3, 3);
  Poly p(vars);
  for (int t = nterms(rng); t > 0; --t) {
    Poly::Exponents e(vars);
    for (auto& x : e) x = static_cast<std::uint32_t>(exp(rng));
    p.add_term(e, Integer(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("poly arithmetic on small examples") {
  CHECK(P("1 + y1", 1) * Poly::one(1) == P("1 + y1", 1));
  CHECK(P("1 + y2", 3) * P("1 + y2*y3", 3) == P("1 + y2 + y2*y3 + y2^2*y3", 3));
  CHECK(Poly::variable(1, 1) * Poly::variable(1, 1) == P("y1^2", 1));
  CHECK(to_string(P("1 + y2", 3) * P("1 + y2*y3", 3)) == "1 + y2 + y2*y3 + y2^2*y3");
  CHECK((P("1 + y1", 2) - P("1 + y1", 2)).is_zero());
}

TEST_CASE("exact division") {
  CHECK(P("1 + y2 + y2*y3", 3).divide_exact(Poly::one(3)) == P("1 + y2 + y2*y3", 3));
  CHECK(P("1 + y1", 1).pow(2).divide_exact(P("1 + y1", 1)) == P("1 + y1", 1));
  CHECK_THROWS_AS(P("1 + y1", 2).divide_exact(P("1 + y2", 2)), InexactDivision);
  CHECK_THROWS_WITH(P("1 + y1", 2).divide_exact(P("1 + y2", 2)), "inexact division");
  CHECK_THROWS_AS(P("3 + y1", 1).divide_exact(P("2", 1)), InexactDivision);
  CHECK_THROWS(P("1", 1).divide_exact(Poly(1)));
}

TEST_CASE("canonical text order: degree first, then earlier variables first") {
  CHECK(to_string(P("y1*y2*y3 + y1*y2 + 1 + y1", 3)) == "1 + y1 + y1*y2 + y1*y2*y3");
  CHECK(to_string(P("y7*y8 + y3*y7 + y7*y10", 10)) == "y3*y7 + y7*y8 + y7*y10");
  CHECK(to_string(P("2*y1 + -y2 + -3", 2)) == "-3 + 2*y1 + -y2");
  CHECK(to_string(Poly(2)) == "0");
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS(parse_poly("1 + z1", 2));
  CHECK_THROWS(parse_poly("1 + y3", 2));
  CHECK_THROWS(parse_poly("1 +  + y1", 2));
}

TEST_CASE("property: product divided by a factor returns the other factor") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int vars = 1 + trial % 4;
    Poly p = random_poly(rng, vars, 5), q = random_poly(rng, vars, 4);
    if (q.is_zero()) continue;
    CHECK((p * q).divide_exact(q) == p);
  }
}

TEST_CASE("property: text form round-trips") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int vars = 1 + trial % 5;
    Poly p = random_poly(rng, vars, 6);
    CHECK(parse_poly(to_string(p), vars) == p);
  }
}

TEST_CASE("laurent division with negative exponents") {
  LaurentPoly a(3), b(3);
  a.add_term({-1, 0, 0}, Integer(1));
  a.add_term({0, 1, 0}, Integer(1));
  b.add_term({1, 0, 0}, Integer(1));
  b.add_term({0, 0, -2}, Integer(2));
  CHECK((a * b).divide_exact(b) == a);
  CHECK(to_string(a, "x") == "x1^-1 + x2");
  LaurentPoly c(3);
  c.add_term({0, 0, 0}, Integer(1));
  c.add_term({1, 0, 0}, Integer(1));
  CHECK_THROWS_AS(c.divide_exact(b, 50), InexactDivision);
}
