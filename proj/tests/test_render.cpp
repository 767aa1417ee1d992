#include <doctest.h>

#include "dsym/render.hpp"

using namespace dsym;

TEST_CASE("parsing permutations and codes") {
  CHECK(parse_permutation("85736124") == Permutation({8, 5, 7, 3, 6, 1, 2, 4}));
  CHECK(parse_permutation("10,9,8,7,6,5,4,3,2,1") == Permutation::reversal(10));
  CHECK(parse_permutation("e") == Permutation());
  CHECK(parse_permutation("") == Permutation());
  CHECK_THROWS_AS(parse_permutation("10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1x2"), std::invalid_argument);
  CHECK(parse_code("3223", 3) == KCode{3, {3, 2, 2, 3}});
  CHECK_THROWS_AS(parse_code("123", 3), std::invalid_argument);
}

TEST_CASE("element rendering") {
  HopfElement e;
  e.basis = PermBasis::F;
  e.add_term(parse_permutation("42531"), 1);
  e.add_term(parse_permutation("312"), 2);
  e.add_term(Permutation(), 1);
  CHECK(to_string(e) == "1 + 2*F[312] + F[42531]");
  e.add_term(parse_permutation("312"), -5);
  CHECK(to_string(e) == "1 - 3*F[312] + F[42531]");

  TensorElement t;
  t.basis = PermBasis::F;
  t.add_term(parse_permutation("21"), Permutation(), 1);
  t.add_term(Permutation(), parse_permutation("21"), 1);
  CHECK(to_string(t) == "1 (x) F[21] + F[21] (x) 1");

  CodeElement c;
  c.k = 3;
  c.basis = CodeBasis::R;
  c.add_term(parse_code("321", 3), 1);
  CHECK(to_string(c) == "R[321]");
  CHECK(to_string(CodeElement{3, CodeBasis::R, {}}) == "0");
}

TEST_CASE("json round trips are canonical") {
  HopfElement e;
  e.basis = PermBasis::G;
  e.add_term(parse_permutation("312"), 7);
  json j = to_json(e);
  CHECK(j["basis"] == "G");
  CHECK(j["terms"][0]["perm"] == json({3, 1, 2}));
  CHECK(j["terms"][0]["coeff"] == 7);
  CHECK(j.dump() == to_json(e).dump());

  Int big("123456789012345678901234567890");
  CHECK(coeff_to_json(big) == "123456789012345678901234567890");
  CHECK(coeff_to_json(Int(-5)) == -5);
}
