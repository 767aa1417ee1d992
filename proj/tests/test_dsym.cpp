#include <doctest.h>

#include "dsym/dsym.hpp"
#include "dsym/fixtures.hpp"

using namespace dsym;

namespace {

Permutation P(const std::string& digits) {
  Word w;
  for (char c : digits) w.push_back(c - '0');
  return Permutation(w);
}

KCode C(int k, const std::string& digits) {
  std::vector<int> d;
  for (char c : digits) d.push_back(c - '0');
  return KCode{k, d};
}

}  // namespace

TEST_CASE("descent classes from codes") {
  // DC_3(1342) = DC_3(2341) = 3331.
  CHECK(descent_code(P("1342"), 3) == C(3, "3331"));
  CHECK(descent_code(P("2341"), 3) == C(3, "3331"));
  CHECK(descent_class_members(C(3, "3331")) == std::vector<Permutation>{P("1342"), P("2341")});
  CHECK(descent_class_min(C(3, "3331")) == P("1342"));
  CHECK(descent_class_max(C(3, "3331")) == P("2341"));
  // The identity code indexes the singleton class of the identity.
  CHECK(descent_class_members(C(3, "3333")) == std::vector<Permutation>{Permutation::identity(4)});
}

TEST_CASE("ribbon expansion in G") {
  HopfElement r = ribbon_to_g(C(3, "3331"));
  HopfElement expected;
  expected.basis = PermBasis::G;
  expected.add_term(P("1342"), 1);
  expected.add_term(P("2341"), 1);
  CHECK(r == expected);

  // All 18 ribbons of degree 4 cover the 24 permutations.
  size_t terms = 0;
  for (const auto& c : enumerate_codes(3, 4)) terms += ribbon_to_g(c).coeffs.size();
  CHECK(terms == 24);
  CHECK(enumerate_codes(3, 4).size() == 18);

  // S^C at the top class sums all of S_n.
  KCode top = descent_code(Permutation::reversal(3), 3);
  CHECK(descent_class_max(top) == Permutation::reversal(3));
  CHECK(scode_to_g(top).coeffs.size() == 6);
}

TEST_CASE("g_to_ribbons and its failure witness") {
  CHECK(g_to_ribbons(ribbon_to_g(C(3, "3331")), 3).coeffs ==
        std::map<KCode, Int>{{C(3, "3331"), 1}});

  // A single G over a two-element descent class is not in the subalgebra.
  HopfElement lone = basis_term(PermBasis::G, P("1342"));
  CHECK_THROWS_AS(g_to_ribbons(lone, 3), NotInSubalgebraError);
  try {
    g_to_ribbons(lone, 3);
  } catch (const NotInSubalgebraError& e) {
    CHECK(e.k() == 3);
    CHECK(e.witness_code() == C(3, "3331"));
    CHECK(((e.member_a() == P("1342") && e.member_b() == P("2341")) ||
           (e.member_a() == P("2341") && e.member_b() == P("1342"))));
    CHECK(e.coeff_a() != e.coeff_b());
  }
  // Completing the class sum lands back inside.
  HopfElement both = hopf_add(lone, basis_term(PermBasis::G, P("2341")));
  CHECK(g_to_ribbons(both, 3).coeffs == std::map<KCode, Int>{{C(3, "3331"), 1}});
}

TEST_CASE("ribbon product fixture") {
  CodeElement got = ribbon_product(C(3, "321"), C(3, "3321"));
  CodeElement expected;
  expected.k = 3;
  expected.basis = CodeBasis::R;
  for (const auto& s : fixtures::kRibbonProduct321x3321) expected.add_term(C(3, s), 1);
  CHECK(got == expected);
  CHECK(ribbon_product(C(3, "321"), KCode{3, {}}).coeffs ==
        std::map<KCode, Int>{{C(3, "321"), 1}});
  CHECK_THROWS_AS(ribbon_product(C(3, "321"), C(2, "21")), std::invalid_argument);
}

TEST_CASE("ribbon coproduct") {
  CodeTensorElement d = ribbon_coproduct(C(3, "3"));
  CodeTensorElement expected;
  expected.k = 3;
  expected.basis = CodeBasis::R;
  expected.add_term(C(3, "3"), KCode{3, {}}, 1);
  expected.add_term(KCode{3, {}}, C(3, "3"), 1);
  CHECK(d == expected);

  // Degree 2: expand Delta(G_21) and regroup.
  KCode c21 = descent_code(P("21"), 3);
  CodeTensorElement d2 = ribbon_coproduct(c21);
  CHECK(d2.coeffs.at({c21, KCode{3, {}}}) == 1);
  CHECK(d2.coeffs.at({KCode{3, {}}, c21}) == 1);
  CHECK(d2.coeffs.at({C(3, "3"), C(3, "3")}) == 1);

  // Exhaustive closure at small degree is itself the oracle.
  for (int n = 0; n <= 4; ++n)
    for (const auto& c : enumerate_codes(3, n)) CHECK_NOTHROW(ribbon_coproduct(c));
}

TEST_CASE("multiplicative code bases") {
  // DC_2(21)=21, DC_2(1)=2, and the product index is DC_2(321)=211.
  CHECK(scode_product_index(C(2, "21"), C(2, "2")) == C(2, "211"));
  CHECK(scode_product_index(C(3, "321"), KCode{3, {}}) == C(3, "321"));
  CHECK(g_product(scode_to_g(C(2, "21")), scode_to_g(C(2, "2"))) == scode_to_g(C(2, "211")));
  CHECK(g_product(ecode_to_g(C(2, "21")), ecode_to_g(C(2, "2"))) ==
        ecode_to_g(ecode_product_index(C(2, "21"), C(2, "2"))));
}

TEST_CASE("triangularity of S in ribbons") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& c : enumerate_codes(3, n)) {
      CodeElement rib = scode_expand_in_ribbons(c);
      CHECK(rib.coeffs.at(c) == 1);
      for (const auto& [cc, coeff] : rib.coeffs) CHECK(coeff == 1);
      CodeElement back = ribbons_to_scodes(rib);
      CHECK(back.coeffs == std::map<KCode, Int>{{c, 1}});
      CHECK(back.basis == CodeBasis::S);
    }
}

TEST_CASE("free generator counts") {
  CHECK(count_free_generators(1, 3, GenSide::S) == 1);
  CHECK(count_free_generators(2, 3, GenSide::S) == 1);
  CHECK(count_free_generators(3, 3, GenSide::S) == 3);
  CHECK(count_free_generators(4, 3, GenSide::S) == 7);
  CHECK(count_free_generators(4, 4, GenSide::S) == 13);
  for (int n = 1; n <= 6; ++n)
    for (int k : {2, 3, 4})
      CHECK(count_free_generators(n, k, GenSide::S) == count_free_generators(n, k, GenSide::E));
}

TEST_CASE("quotient product and coproduct") {
  CHECK(f_class(P("42531"), 3) == f_class(P("21543"), 3));
  CHECK(class_representative(f_class(P("42531"), 3)) == P("21543"));

  KCode c42531 = f_class(P("42531"), 3);
  KCode c1 = f_class(P("1"), 3);
  CodeElement prod = fq_product(c42531, c1);
  CodeElement expected =
      project_to_classes(f_product(basis_term(PermBasis::F, P("42531")),
                                   basis_term(PermBasis::F, P("1"))), 3);
  CHECK(prod == expected);
  CHECK(fq_product(c42531, KCode{3, {}}).coeffs == std::map<KCode, Int>{{c42531, 1}});

  // Noncommutativity witness at k=3: F_3 F_33 vs F_33 F_3.
  CHECK(fq_product(C(3, "3"), C(3, "33")) != fq_product(C(3, "33"), C(3, "3")));

  CodeTensorElement cop = fq_coproduct(C(3, "3"));
  CHECK(cop.coeffs.size() == 2);
  CHECK_THROWS_AS(fq_product(C(3, "3"), C(2, "2")), std::invalid_argument);
}
