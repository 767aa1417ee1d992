#include <doctest.h>

#include "dsym/fixtures.hpp"
#include "dsym/stats.hpp"

using namespace dsym;

namespace {

MultiPoly from_fixture(int nvars, char symbol, const fixtures::PolyFixture& fx) {
  MultiPoly p;
  p.nvars = nvars;
  p.symbol = symbol;
  for (const auto& [expo, c] : fx) p.add_term(expo, c);
  return p;
}

}  // namespace

TEST_CASE("Eulerian polynomials match the displays") {
  CHECK(eulerian_poly(1, 3) == poly_constant(3, 't', 1));
  MultiPoly e23;
  e23.nvars = 3;
  e23.symbol = 't';
  e23.add_term({0, 1, 0}, 1);
  e23.add_term({0, 0, 1}, 1);
  CHECK(eulerian_poly(2, 3) == e23);
  CHECK(eulerian_poly(3, 3) == from_fixture(3, 't', fixtures::kEulerian33));
  CHECK(eulerian_poly(4, 3) == from_fixture(3, 't', fixtures::kEulerian43));
  CHECK(eulerian_poly(0, 3) == poly_constant(3, 't', 1));
}

TEST_CASE("major polynomials match the displays") {
  CHECK(major_poly(1, 3) == poly_constant(3, 'q', 1));
  MultiPoly m23;
  m23.nvars = 3;
  m23.symbol = 'q';
  m23.add_term({0, 1, 0}, 1);
  m23.add_term({0, 0, 1}, 1);
  CHECK(major_poly(2, 3) == m23);
  CHECK(major_poly(3, 3) == from_fixture(3, 'q', fixtures::kMajor33));
}

TEST_CASE("specialize") {
  // All variables to one counts S_n.
  std::vector<VarImage> ones(3, VarImage(Int(1)));
  CHECK(specialize(eulerian_poly(5, 3), ones, 0, 't') == poly_constant(0, 't', 120));
  CHECK(specialize(major_poly(5, 3), ones, 0, 'q') == poly_constant(0, 'q', 120));
  CHECK(specialize(poly_constant(3, 't', 1), ones, 0, 't') == poly_constant(0, 't', 1));

  // Classical Eulerian polynomial via t1 -> t, t2 -> 1; oracle = descent
  // counting over S_4.
  MultiPoly got = specialize(eulerian_poly(4, 2), {VarImage(0), VarImage(Int(1))}, 1, 't');
  MultiPoly expected;
  expected.nvars = 1;
  expected.symbol = 't';
  for (const auto& p : all_permutations(4)) {
    int des = 0;
    for (int i = 1; i < 4; ++i)
      if (p.value_at(i) > p.value_at(i + 1)) ++des;
    expected.add_term({des}, 1);
  }
  CHECK(got == expected);
  MultiPoly pinned;
  pinned.nvars = 1;
  pinned.symbol = 't';
  pinned.add_term({0}, 1);
  pinned.add_term({1}, 11);
  pinned.add_term({2}, 11);
  pinned.add_term({3}, 1);
  CHECK(got == pinned);

  CHECK_THROWS_AS(specialize(eulerian_poly(3, 3), {VarImage(Int(1))}, 0, 't'),
                  std::invalid_argument);
}

TEST_CASE("polynomial rendering") {
  CHECK(to_string(eulerian_poly(2, 3)) == "t2 + t3");
  CHECK(to_string(poly_constant(3, 't', 1)) == "1");
  CHECK(to_string(MultiPoly{3, 't', {}}) == "0");
  CHECK(to_string(eulerian_poly(3, 3)) == "t1*t2 + t1*t3 + t2^2 + 2*t2*t3 + t3^2");
}
