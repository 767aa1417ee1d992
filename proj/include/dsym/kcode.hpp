#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dsym/perm.hpp"

namespace dsym {

/// Exact integers everywhere: class counts, series and Hopf coefficients.
using Int = boost::multiprecision::cpp_int;

/// A k-descent or k-recoil code: digits d_1..d_n with
/// d_l in [max(k-l+1,1), k]. In particular d_1 = k whenever n >= 1.
struct KCode {
  int k = 1;
  std::vector<int> digits;

  int size() const { return static_cast<int>(digits.size()); }
  bool valid() const;

  bool operator==(const KCode&) const = default;
  std::strong_ordering operator<=>(const KCode& o) const {
    if (auto c = k <=> o.k; c != 0) return c;
    if (auto c = digits.size() <=> o.digits.size(); c != 0) return c;
    return digits <=> o.digits;
  }
};

/// Digit string for k <= 9 ("32212123"), comma-separated otherwise.
std::string to_string(const KCode&);
std::ostream& operator<<(std::ostream&, const KCode&);

bool is_valid_code(const std::vector<int>& digits, int k);

/// d_i = rank of sigma(i) among its k-1 predecessors, with sigma extended to
/// the integers by sigma(i) = i outside [1,n].
KCode descent_code(const Permutation& sigma, int k);

/// Descent code of the inverse.
KCode recoil_code(const Permutation& sigma, int k);

/// Independent route: position of i in the restriction of the Z-extended
/// sigma to the values [i-k+1, i]. Used as a cross-check of recoil_code.
KCode recoil_code_by_restriction(const Permutation& sigma, int k);

/// Descent code of the first window followed by the last letter of each
/// subsequent window. Throws if the pattern is inconsistent.
KCode code_from_pattern(const KPattern& p);

/// Inverse of code_from_pattern; requires |code| >= k.
KPattern pattern_from_code(const KCode& code);

/// All valid codes of the given length in lexicographic order.
std::vector<KCode> enumerate_codes(int k, int n);

/// n! if n <= k, else k! k^(n-k).
Int count_codes(int k, int n);

/// Lexicographically smallest / largest permutation with the given recoil
/// code, built by iterated insertion of 1..n.
Permutation min_rep(const KCode& code);
Permutation max_rep(const KCode& code);

/// No adjacent pair drops (resp. rises) by k or more.
bool is_min_element(const Permutation& sigma, int k);
bool is_max_element(const Permutation& sigma, int k);

enum class ClassKind { Recoil, Descent };

/// One equivalence class: all permutations sharing a code, with its
/// extremes in the right (recoil) or left (descent) weak order.
struct EquivClass {
  int k = 1;
  ClassKind kind = ClassKind::Recoil;
  KCode code;
  std::vector<Permutation> members;  // sorted lexicographically
  Permutation min_rep;
  Permutation max_rep;
};

/// Closure of {sigma} under exchanging adjacent letters whose values differ
/// by at least k.
EquivClass recoil_class(const Permutation& sigma, int k);

/// Image of the recoil class of the inverse under inversion.
EquivClass descent_class(const Permutation& sigma, int k);

/// Partition of S_n by code, sorted by code; total member count is n!.
std::vector<EquivClass> classes_of_sn(int n, int k, ClassKind kind);

/// Same letter multiset and equivalent standardizations.
bool words_equivalent(const Word& u, const Word& v, int k);

}  // namespace dsym
