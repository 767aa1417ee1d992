#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dsym {

/// Word over the positive integers; letters may repeat.
using Word = std::vector<int>;

/// Permutation of {1,...,n} in one-line notation. n = 0 (the empty
/// permutation) is first-class: it is the unit of every graded structure
/// in this library.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a rearrangement of 1..n.
  explicit Permutation(Word word);

  static Permutation identity(int n);
  static Permutation reversal(int n);  // n, n-1, ..., 1

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  const Word& word() const { return word_; }

  /// Value at a 1-based position.
  int value_at(int pos) const { return word_[static_cast<size_t>(pos - 1)]; }
  /// 1-based position of a value (which must occur).
  int position_of(int value) const;

  bool operator==(const Permutation&) const = default;

  /// Size first, then lexicographic: the term order used in every
  /// rendered expansion and every sorted member list.
  std::strong_ordering operator<=>(const Permutation& o) const {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return word_ <=> o.word_;
  }

 private:
  Word word_;
};

/// Compact digit string for n <= 9 ("85736124"), comma-separated otherwise.
std::string to_string(const Permutation&);
std::ostream& operator<<(std::ostream&, const Permutation&);

/// Sliding-window pattern: the standardizations of all width-k windows.
struct KPattern {
  int k = 1;
  std::vector<Permutation> windows;
};

/// True iff every window has size k and consecutive windows overlap
/// consistently (dropping the first letter of one and the last letter of
/// the next standardize to the same permutation).
bool kpattern_is_consistent(const KPattern& p);

enum class Side { Right, Left };

Permutation standardize(const Word& w);
Permutation inverse(const Permutation& sigma);

/// Every letter increased by i (i >= 0).
Word shift(const Word& w, int i);
Word shift(const Permutation& sigma, int i);

/// shift(sigma,|tau|) followed by tau.
Permutation shifted_concat_top(const Permutation& sigma, const Permutation& tau);
/// sigma followed by shift(tau,|sigma|).
Permutation shifted_concat_bottom(const Permutation& sigma, const Permutation& tau);

/// Subword of sigma keeping the letters v with a <= v <= b, order preserved.
Word restrict_to_values(const Permutation& sigma, int a, int b);

/// Standardizations of the n-k+1 windows of width k. Requires 1 <= k <= n.
KPattern window_patterns(const Permutation& sigma, int k);

/// { (a,b) : a < b, a appears after b in sigma }, sorted.
std::vector<std::pair<int, int>> inversion_set(const Permutation& sigma);

/// Weak-order comparison by inversion-set containment (of the inverses for
/// the left order). Throws on size mismatch.
bool weak_leq(const Permutation& sigma, const Permutation& tau, Side side);

/// All sigma <= top (resp. >= bottom, resp. in [lo,hi]) in the chosen weak
/// order, enumerated by breadth-first closure over cover moves and returned
/// in lexicographic order.
std::vector<Permutation> weak_ideal(const Permutation& top, Side side);
std::vector<Permutation> weak_filter(const Permutation& bottom, Side side);
std::vector<Permutation> weak_interval(const Permutation& lo, const Permutation& hi, Side side);

/// No proper prefix of sigma is {1,...,j}. Requires |sigma| >= 1.
bool is_connected(const Permutation& sigma);
Permutation mirror(const Permutation& sigma);      // word reversed
Permutation complement(const Permutation& sigma);  // v -> n+1-v

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Lazy lexicographic enumeration of S_n (n = 0 yields the empty permutation).
class PermutationRange {
 public:
  explicit PermutationRange(int n) : n_(n) {}

  class iterator {
   public:
    using value_type = Permutation;
    iterator() = default;
    explicit iterator(int n);
    const Permutation& operator*() const { return current_; }
    iterator& operator++();
    bool operator==(const iterator& o) const { return done_ == o.done_; }

   private:
    Permutation current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
};

}  // namespace dsym
