#include "dsym/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dsym {

Permutation::Permutation(Word word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("permutation word must cover 1..n exactly once");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  Word w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::reversal(int n) {
  Word w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

int Permutation::position_of(int value) const {
  for (int i = 0; i < size(); ++i)
    if (word_[static_cast<size_t>(i)] == value) return i + 1;
  throw std::invalid_argument("value not present in permutation");
}

std::string to_string(const Permutation& p) {
  if (p.empty()) return "e";
  std::ostringstream os;
  const bool compact = p.size() <= 9;
  for (int i = 0; i < p.size(); ++i) {
    if (i > 0 && !compact) os << ',';
    os << p.word()[static_cast<size_t>(i)];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_string(p);
}

bool kpattern_is_consistent(const KPattern& p) {
  if (p.k < 1) return false;
  for (const auto& w : p.windows)
    if (w.size() != p.k) return false;
  for (size_t j = 0; j + 1 < p.windows.size(); ++j) {
    const Word& a = p.windows[j].word();
    const Word& b = p.windows[j + 1].word();
    Word a_tail(a.begin() + 1, a.end());
    Word b_head(b.begin(), b.end() - 1);
    if (standardize(a_tail) != standardize(b_head)) return false;
  }
  return true;
}

Permutation standardize(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return w[static_cast<size_t>(a)] < w[static_cast<size_t>(b)]; });
  Word out(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) out[static_cast<size_t>(idx[static_cast<size_t>(r)])] = r + 1;
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& sigma) {
  Word out(static_cast<size_t>(sigma.size()));
  for (int i = 0; i < sigma.size(); ++i)
    out[static_cast<size_t>(sigma.word()[static_cast<size_t>(i)] - 1)] = i + 1;
  return Permutation(std::move(out));
}

Word shift(const Word& w, int i) {
  if (i < 0) throw std::invalid_argument("shift offset must be non-negative");
  Word out(w);
  for (int& v : out) v += i;
  return out;
}

Word shift(const Permutation& sigma, int i) { return shift(sigma.word(), i); }

Permutation shifted_concat_top(const Permutation& sigma, const Permutation& tau) {
  Word w = shift(sigma, tau.size());
  w.insert(w.end(), tau.word().begin(), tau.word().end());
  return Permutation(std::move(w));
}

Permutation shifted_concat_bottom(const Permutation& sigma, const Permutation& tau) {
  Word w = sigma.word();
  Word t = shift(tau, sigma.size());
  w.insert(w.end(), t.begin(), t.end());
  return Permutation(std::move(w));
}

Word restrict_to_values(const Permutation& sigma, int a, int b) {
  Word out;
  for (int v : sigma.word())
    if (a <= v && v <= b) out.push_back(v);
  return out;
}

KPattern window_patterns(const Permutation& sigma, int k) {
  if (k < 1) throw std::invalid_argument("window width must be >= 1");
  if (sigma.size() < k)
    throw std::invalid_argument("window pattern undefined for |sigma| < k");
  KPattern p;
  p.k = k;
  for (int j = 0; j + k <= sigma.size(); ++j) {
    Word win(sigma.word().begin() + j, sigma.word().begin() + j + k);
    p.windows.push_back(standardize(win));
  }
  return p;
}

std::vector<std::pair<int, int>> inversion_set(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) pos[static_cast<size_t>(sigma.value_at(i))] = i;
  std::vector<std::pair<int, int>> inv;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (pos[static_cast<size_t>(a)] > pos[static_cast<size_t>(b)]) inv.emplace_back(a, b);
  return inv;
}

bool weak_leq(const Permutation& sigma, const Permutation& tau, Side side) {
  if (sigma.size() != tau.size())
    throw std::invalid_argument("weak order compares equal sizes only");
  if (side == Side::Left) return weak_leq(inverse(sigma), inverse(tau), Side::Right);
  auto a = inversion_set(sigma);
  auto b = inversion_set(tau);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

// Cover moves of the weak order. Right: swap an adjacent position pair.
// Left: swap the letters v and v+1 in place.
std::vector<Permutation> weak_covers(const Permutation& p, Side side, bool down) {
  std::vector<Permutation> out;
  const int n = p.size();
  if (side == Side::Right) {
    for (int i = 0; i + 1 < n; ++i) {
      const int x = p.word()[static_cast<size_t>(i)];
      const int y = p.word()[static_cast<size_t>(i + 1)];
      if (down ? x > y : x < y) {
        Word w = p.word();
        std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(i + 1)]);
        out.emplace_back(std::move(w));
      }
    }
  } else {
    for (int v = 1; v < n; ++v) {
      const int pv = p.position_of(v);
      const int pv1 = p.position_of(v + 1);
      if (down ? pv1 < pv : pv < pv1) {
        Word w = p.word();
        std::swap(w[static_cast<size_t>(pv - 1)], w[static_cast<size_t>(pv1 - 1)]);
        out.emplace_back(std::move(w));
      }
    }
  }
  return out;
}

std::vector<Permutation> closure(const Permutation& start, Side side, bool down) {
  std::set<Permutation> seen{start};
  std::queue<Permutation> todo;
  todo.push(start);
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop();
    for (auto& nb : weak_covers(cur, side, down))
      if (seen.insert(nb).second) todo.push(nb);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Permutation> weak_ideal(const Permutation& top, Side side) {
  return closure(top, side, /*down=*/true);
}

std::vector<Permutation> weak_filter(const Permutation& bottom, Side side) {
  return closure(bottom, side, /*down=*/false);
}

std::vector<Permutation> weak_interval(const Permutation& lo, const Permutation& hi, Side side) {
  if (!weak_leq(lo, hi, side))
    throw std::invalid_argument("weak_interval requires lo <= hi");
  // Downward closure from hi, pruned to elements above lo. Any down-chain
  // from hi to a member of [lo,hi] stays above that member, so pruning
  // cannot disconnect the interval.
  std::set<Permutation> seen{hi};
  std::queue<Permutation> todo;
  todo.push(hi);
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop();
    for (auto& nb : weak_covers(cur, side, /*down=*/true))
      if (weak_leq(lo, nb, side) && seen.insert(nb).second) todo.push(nb);
  }
  return {seen.begin(), seen.end()};
}

bool is_connected(const Permutation& sigma) {
  if (sigma.empty()) throw std::invalid_argument("connectivity undefined for the empty permutation");
  int mx = 0;
  for (int j = 1; j < sigma.size(); ++j) {
    mx = std::max(mx, sigma.value_at(j));
    if (mx == j) return false;
  }
  return true;
}

Permutation mirror(const Permutation& sigma) {
  Word w(sigma.word().rbegin(), sigma.word().rend());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& sigma) {
  const int n = sigma.size();
  Word w = sigma.word();
  for (int& v : w) v = n + 1 - v;
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for (const auto& p : PermutationRange(n)) out.push_back(p);
  return out;
}

PermutationRange::iterator::iterator(int n) : current_(Permutation::identity(n)), done_(false) {}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  Word w = current_.word();
  if (std::next_permutation(w.begin(), w.end())) {
    current_ = Permutation(std::move(w));
  } else {
    done_ = true;
  }
  return *this;
}

}  // namespace dsym
