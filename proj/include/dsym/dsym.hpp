#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsym/fqsym.hpp"
#include "dsym/kcode.hpp"
#include "dsym/series.hpp"

namespace dsym {

/// Bases indexed by codes: R (ribbons), S/E (multiplicative), F (classes of
/// the quotient).
enum class CodeBasis { R, S, E, F };

std::string basis_name(CodeBasis b);

/// Sparse exact-integer combination of code-indexed basis elements.
struct CodeElement {
  int k = 1;
  CodeBasis basis = CodeBasis::R;
  std::map<KCode, Int> coeffs;

  void add_term(const KCode& c, const Int& coeff);
  bool is_zero() const { return coeffs.empty(); }

  bool operator==(const CodeElement&) const = default;
};

/// Tensor square of code-indexed elements (coproduct outputs).
struct CodeTensorElement {
  int k = 1;
  CodeBasis basis = CodeBasis::R;
  std::map<std::pair<KCode, KCode>, Int> coeffs;

  void add_term(const KCode& l, const KCode& r, const Int& coeff);
  bool is_zero() const { return coeffs.empty(); }

  bool operator==(const CodeTensorElement&) const = default;
};

/// Raised when a G-expansion is not constant on descent classes, i.e. the
/// element lies outside the subalgebra. Carries a witness pair.
class NotInSubalgebraError : public std::runtime_error {
 public:
  NotInSubalgebraError(int k, KCode code, Permutation a, Int coeff_a, Permutation b, Int coeff_b);

  int k() const { return k_; }
  const KCode& witness_code() const { return code_; }
  const Permutation& member_a() const { return a_; }
  const Permutation& member_b() const { return b_; }
  const Int& coeff_a() const { return ca_; }
  const Int& coeff_b() const { return cb_; }

 private:
  int k_;
  KCode code_;
  Permutation a_, b_;
  Int ca_, cb_;
};

/// All permutations with the given descent code, sorted.
std::vector<Permutation> descent_class_members(const KCode& code);
/// Extremes of that class in the left weak order.
Permutation descent_class_min(const KCode& code);
Permutation descent_class_max(const KCode& code);

/// R_C: the sum of G_sigma over the descent class of C.
HopfElement ribbon_to_g(const KCode& code);
/// S^C = S^(omega_C), E^C = E^(alpha_C).
HopfElement scode_to_g(const KCode& code);
HopfElement ecode_to_g(const KCode& code);

/// Regroups a G-expansion by descent class; throws NotInSubalgebraError if
/// coefficients are not constant per class.
CodeElement g_to_ribbons(const HopfElement& a, int k);

CodeElement ribbon_product(const KCode& a, const KCode& b);
CodeTensorElement ribbon_coproduct(const KCode& code);

/// Index of S^C S^C' (top shifted concatenation of the class maxima);
/// dually for E.
KCode scode_product_index(const KCode& a, const KCode& b);
KCode ecode_product_index(const KCode& a, const KCode& b);

/// S^C expanded in ribbons (0/1 coefficients), and the inverse change of
/// basis by unitriangular elimination.
CodeElement scode_expand_in_ribbons(const KCode& code);
CodeElement ribbons_to_scodes(const CodeElement& a);

enum class GenSide { S, E };

/// Number of free-algebra generators in degree n: permutations that are
/// mirror images of connected permutations and extremes of their descent
/// class in the left weak order (maxima for S, minima for E).
long long count_free_generators(int n, int k, GenSide side);

/// Graded dimensions (closed form) and generator counts (via series
/// inversion of the Hilbert series).
PowerSeries hilbert_series(int k, int order);
PowerSeries generator_series(int k, int order);

/// The descent code of sigma, as an index of the quotient basis.
KCode f_class(const Permutation& sigma, int k);

/// Canonical class representative: the lexicographically smallest sigma
/// with the given descent code.
Permutation class_representative(const KCode& code);

/// Product and coproduct of the quotient, computed on canonical
/// representatives and projected classwise.
CodeElement fq_product(const KCode& a, const KCode& b);
CodeTensorElement fq_coproduct(const KCode& code);

/// Classwise projection of an F-basis element (resp. tensor).
CodeElement project_to_classes(const HopfElement& a, int k);
CodeTensorElement project_to_classes(const TensorElement& a, int k);

}  // namespace dsym
