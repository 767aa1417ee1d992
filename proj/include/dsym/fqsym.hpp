#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dsym/kcode.hpp"
#include "dsym/perm.hpp"

namespace dsym {

/// Bases of the Hopf algebra of permutations. F and G are dual-by-inverse
/// views of each other; S and E are the multiplicative bases built from
/// left weak-order ideals and filters.
enum class PermBasis { F, G, S, E };

std::string basis_name(PermBasis b);

/// Graded, sparse, exact-integer combination of basis elements. Mixed
/// degrees are allowed; the empty permutation indexes the unit.
struct HopfElement {
  PermBasis basis = PermBasis::G;
  std::map<Permutation, Int> coeffs;

  void add_term(const Permutation& p, const Int& c);
  bool is_zero() const { return coeffs.empty(); }

  bool operator==(const HopfElement&) const = default;
};

/// Element of the tensor square, used for coproduct outputs.
struct TensorElement {
  PermBasis basis = PermBasis::G;
  std::map<std::pair<Permutation, Permutation>, Int> coeffs;

  void add_term(const Permutation& l, const Permutation& r, const Int& c);
  bool is_zero() const { return coeffs.empty(); }

  bool operator==(const TensorElement&) const = default;
};

HopfElement basis_term(PermBasis basis, const Permutation& p, const Int& c = 1);
HopfElement hopf_unit(PermBasis basis);

HopfElement hopf_add(const HopfElement& a, const HopfElement& b);
HopfElement hopf_sub(const HopfElement& a, const HopfElement& b);
HopfElement hopf_scale(const HopfElement& a, const Int& c);

/// Coefficient of the empty permutation.
Int counit(const HopfElement& a);

/// All interleavings of two disjoint-letter words.
std::vector<Word> shuffle_words(const Word& a, const Word& b);

/// F_sigma F_tau = sum of F_w over the shuffles of sigma with the shifted tau.
HopfElement f_product(const HopfElement& a, const HopfElement& b);

/// G product, routed through the F product on inverses.
HopfElement g_product(const HopfElement& a, const HopfElement& b);

/// Deconcatenate and standardize both halves.
TensorElement f_coproduct(const HopfElement& a);

/// Restrict to the value intervals [1,i] and [i+1,n] and standardize.
/// Agrees with the duality route through f_coproduct.
TensorElement g_coproduct(const HopfElement& a);

/// Duality route for the G coproduct: f_coproduct of the inverse index with
/// both tensor legs inverted. Kept separate as a cross-check.
TensorElement g_coproduct_via_duality(const HopfElement& a);

/// Sum of G_tau over tau <= sigma (resp. >= sigma) in the left weak order.
HopfElement s_elem(const Permutation& sigma);
HopfElement e_elem(const Permutation& sigma);

/// Index of the product of two S (resp. E) basis elements.
Permutation s_product_index(const Permutation& sigma, const Permutation& tau);
Permutation e_product_index(const Permutation& sigma, const Permutation& tau);

/// Exact change of basis into G.
HopfElement to_g(const HopfElement& a);
/// Change of basis out of G (S and E solve the unitriangular system along
/// the weak order).
HopfElement g_to_f(const HopfElement& a);
HopfElement g_to_s(const HopfElement& a);
HopfElement g_to_e(const HopfElement& a);

/// Componentwise product in the tensor square (no signs); both arguments
/// must be in the F basis.
TensorElement tensor_f_product(const TensorElement& a, const TensorElement& b);

}  // namespace dsym
