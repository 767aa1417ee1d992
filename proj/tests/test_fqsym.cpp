#include <doctest.h>

#include "dsym/fixtures.hpp"
#include "dsym/fqsym.hpp"

using namespace dsym;

namespace {

Permutation P(const std::string& digits) {
  if (digits == "e") return Permutation();
  Word w;
  for (char c : digits) w.push_back(c - '0');
  return Permutation(w);
}

HopfElement sum(PermBasis basis, const std::vector<std::string>& idx) {
  HopfElement e;
  e.basis = basis;
  for (const auto& s : idx) e.add_term(P(s), 1);
  return e;
}

}  // namespace

TEST_CASE("shuffles") {
  CHECK(shuffle_words({1}, {2}).size() == 2);
  CHECK(shuffle_words({}, {1, 2}) == std::vector<Word>{{1, 2}});
  CHECK(shuffle_words({2, 1}, {3}).size() == 3);
}

TEST_CASE("F product matches the displays") {
  CHECK(f_product(basis_term(PermBasis::F, P("42531")), basis_term(PermBasis::F, P("1"))) ==
        sum(PermBasis::F, fixtures::kProduct42531x1));
  CHECK(f_product(basis_term(PermBasis::F, P("21543")), basis_term(PermBasis::F, P("1"))) ==
        sum(PermBasis::F, fixtures::kProduct21543x1));
  CHECK(f_product(basis_term(PermBasis::F, P("1")), basis_term(PermBasis::F, P("1"))) ==
        sum(PermBasis::F, {"12", "21"}));
  CHECK(f_product(hopf_unit(PermBasis::F), basis_term(PermBasis::F, P("312"))) ==
        basis_term(PermBasis::F, P("312")));
  CHECK_THROWS_AS(f_product(basis_term(PermBasis::F, P("1")), basis_term(PermBasis::G, P("1"))),
                  std::invalid_argument);
  CHECK_THROWS_AS(f_product(basis_term(PermBasis::G, P("1")), basis_term(PermBasis::G, P("1"))),
                  std::invalid_argument);
}

TEST_CASE("G product via duality equals the convolution oracle") {
  CHECK(g_product(basis_term(PermBasis::G, P("1")), basis_term(PermBasis::G, P("1"))) ==
        sum(PermBasis::G, {"12", "21"}));
  CHECK(g_product(basis_term(PermBasis::G, P("12")), basis_term(PermBasis::G, P("1"))) ==
        sum(PermBasis::G, {"123", "132", "231"}));
  for (const auto& a : all_permutations(2))
    for (const auto& b : all_permutations(2)) {
      HopfElement expected;
      expected.basis = PermBasis::G;
      for (const auto& w : all_permutations(4)) {
        Word head(w.word().begin(), w.word().begin() + 2);
        Word tail(w.word().begin() + 2, w.word().end());
        if (standardize(head) == a && standardize(tail) == b) expected.add_term(w, 1);
      }
      CHECK(g_product(basis_term(PermBasis::G, a), basis_term(PermBasis::G, b)) == expected);
    }
}

TEST_CASE("coproducts match the displays") {
  TensorElement d42531 = f_coproduct(basis_term(PermBasis::F, P("42531")));
  TensorElement expected;
  expected.basis = PermBasis::F;
  for (const auto& [l, r] : fixtures::kCoproduct42531) expected.add_term(P(l), P(r), 1);
  CHECK(d42531 == expected);

  TensorElement d21543 = f_coproduct(basis_term(PermBasis::F, P("21543")));
  TensorElement expected2;
  expected2.basis = PermBasis::F;
  for (const auto& [l, r] : fixtures::kCoproduct21543) expected2.add_term(P(l), P(r), 1);
  CHECK(d21543 == expected2);

  TensorElement d1 = f_coproduct(basis_term(PermBasis::F, P("1")));
  TensorElement expected3;
  expected3.basis = PermBasis::F;
  expected3.add_term(P("1"), Permutation(), 1);
  expected3.add_term(Permutation(), P("1"), 1);
  CHECK(d1 == expected3);

  TensorElement dg1 = g_coproduct(basis_term(PermBasis::G, P("1")));
  TensorElement expected_g1;
  expected_g1.basis = PermBasis::G;
  expected_g1.add_term(P("1"), Permutation(), 1);
  expected_g1.add_term(Permutation(), P("1"), 1);
  CHECK(dg1 == expected_g1);

  TensorElement d21 = g_coproduct(basis_term(PermBasis::G, P("21")));
  TensorElement expected4;
  expected4.basis = PermBasis::G;
  expected4.add_term(P("21"), Permutation(), 1);
  expected4.add_term(P("1"), P("1"), 1);
  expected4.add_term(Permutation(), P("21"), 1);
  CHECK(d21 == expected4);

  // Delta G_312: the i=1 split restricts to the value sets {1} and {2,3}.
  TensorElement d312 = g_coproduct(basis_term(PermBasis::G, P("312")));
  CHECK(d312.coeffs.at({P("1"), P("21")}) == 1);
  CHECK(d312 == g_coproduct_via_duality(basis_term(PermBasis::G, P("312"))));
}

TEST_CASE("S and E elements") {
  CHECK(s_elem(Permutation::identity(3)) == basis_term(PermBasis::G, Permutation::identity(3)));
  CHECK(s_elem(P("321")) == sum(PermBasis::G, {"123", "132", "213", "231", "312", "321"}));
  CHECK(e_elem(Permutation::reversal(3)) == basis_term(PermBasis::G, P("321")));
  CHECK(e_elem(Permutation::identity(2)) == sum(PermBasis::G, {"12", "21"}));
  CHECK(s_product_index(P("21"), P("1")) == P("321"));
  CHECK(e_product_index(P("21"), P("1")) == P("213"));
  CHECK(s_product_index(Permutation(), P("312")) == P("312"));
  // Multiplicativity on a couple of pairs.
  CHECK(g_product(s_elem(P("21")), s_elem(P("1"))) == s_elem(P("321")));
  CHECK(g_product(e_elem(P("21")), e_elem(P("1"))) == e_elem(P("213")));
}

TEST_CASE("unit, counit, scaling") {
  HopfElement f = basis_term(PermBasis::F, P("312"), 3);
  CHECK(counit(f) == 0);
  CHECK(counit(hopf_scale(hopf_unit(PermBasis::F), 7)) == 7);
  CHECK(hopf_add(f, hopf_scale(f, -1)).is_zero());
  CHECK(hopf_sub(f, f).is_zero());
}

TEST_CASE("basis conversions round trip") {
  for (const auto& p : all_permutations(4)) {
    HopfElement g = basis_term(PermBasis::G, p);
    CHECK(to_g(g_to_f(g)) == g);
    CHECK(to_g(g_to_s(g)) == g);
    CHECK(to_g(g_to_e(g)) == g);
    CHECK(g_to_s(s_elem(p)) == basis_term(PermBasis::S, p));
    CHECK(g_to_e(e_elem(p)) == basis_term(PermBasis::E, p));
  }
}

TEST_CASE("tensor product of coproducts") {
  HopfElement fa = basis_term(PermBasis::F, P("21"));
  HopfElement fb = basis_term(PermBasis::F, P("1"));
  CHECK(f_coproduct(f_product(fa, fb)) == tensor_f_product(f_coproduct(fa), f_coproduct(fb)));
}
