#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dsym/kcode.hpp"

namespace dsym {

/// Sparse multivariate polynomial with exact integer coefficients in
/// variables symbol_1..symbol_nvars. Zero coefficients are never stored.
struct MultiPoly {
  int nvars = 0;
  char symbol = 't';
  std::map<std::vector<int>, Int> terms;  // exponent vector -> coefficient

  void add_term(const std::vector<int>& expo, const Int& c);
  bool is_zero() const { return terms.empty(); }

  bool operator==(const MultiPoly&) const = default;
};

MultiPoly poly_constant(int nvars, char symbol, const Int& c);

/// Sum over S_n of the product of t_{c_l} for l = 2..n, c the k-recoil code.
/// n = 0 gives the constant 1 (empty product).
MultiPoly eulerian_poly(int n, int k);

/// Sum over S_n of the product of q_{c_i}^(i-1), c the k-recoil code.
MultiPoly major_poly(int n, int k);

/// Image of one source variable: an integer constant or a target variable
/// (0-based index).
using VarImage = std::variant<Int, int>;

/// Substitutes every variable of p; throws if the assignment does not cover
/// them all (images.size() != p.nvars).
MultiPoly specialize(const MultiPoly& p, const std::vector<VarImage>& images,
                     int target_nvars, char target_symbol);

/// "t1^2*t2 + 7*t1*t2*t3 + ..." in graded lexicographic order.
std::string to_string(const MultiPoly& p);

}  // namespace dsym
