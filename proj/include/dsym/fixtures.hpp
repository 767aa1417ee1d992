#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dsym::fixtures {

// Known generator-count sequences, degrees 1..13.
// OEIS A001333 (window width 3) and A084519 (window width 4).
extern const std::vector<long long> kGenerators3;
extern const std::vector<long long> kGenerators4;

// 3-recoil codes of S_3 and S_4, one per permutation in lexicographic order.
extern const std::vector<std::string> kS3RecoilCodes;
extern const std::vector<std::string> kS4RecoilCodes;

// The six two-element 3-recoil classes of S_4, members sorted.
extern const std::vector<std::pair<std::string, std::string>> kS4DoubletonClasses;

// Descent-code fixtures: permutation, width, code.
struct CodeFixture {
  std::string perm;
  int k;
  std::string code;
};
extern const std::vector<CodeFixture> kDescentCodeFixtures;
extern const CodeFixture kRecoilCodeFixture;  // RC_3(425163) = 323123

// Window pattern of 85736124 at width 3 and its code.
extern const std::vector<std::string> kWindowPattern85736124;
extern const std::string kWindowCode85736124;

// Shuffle products F_sigma * F_1 in FQSym.
extern const std::vector<std::string> kProduct42531x1;
extern const std::vector<std::string> kProduct21543x1;

// Coproducts Delta F_sigma as (left, right) index pairs ("e" = empty).
extern const std::vector<std::pair<std::string, std::string>> kCoproduct42531;
extern const std::vector<std::pair<std::string, std::string>> kCoproduct21543;

// R_321 * R_3321 at width 3.
extern const std::vector<std::string> kRibbonProduct321x3321;

// Multivariate polynomial fixtures as (exponent vector, coefficient) lists
// over t_1..t_3 / q_1..q_3.
using PolyFixture = std::vector<std::pair<std::vector<int>, long long>>;
extern const PolyFixture kEulerian33;
extern const PolyFixture kEulerian43;
extern const PolyFixture kMajor33;

// Classical Eulerian polynomial of degree 4: 1 + 11t + 11t^2 + t^3.
extern const std::vector<long long> kClassicalEulerian4;

}  // namespace dsym::fixtures
