#include "dsym/kcode.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dsym {

bool is_valid_code(const std::vector<int>& digits, int k) {
  if (k < 1) return false;
  for (size_t l = 0; l < digits.size(); ++l) {
    const int lo = std::max(k - static_cast<int>(l), 1);  // l is 0-based
    if (digits[l] < lo || digits[l] > k) return false;
  }
  return true;
}

bool KCode::valid() const { return is_valid_code(digits, k); }

std::string to_string(const KCode& c) {
  if (c.digits.empty()) return "e";
  std::ostringstream os;
  const bool compact = c.k <= 9;
  for (size_t i = 0; i < c.digits.size(); ++i) {
    if (i > 0 && !compact) os << ',';
    os << c.digits[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const KCode& c) { return os << to_string(c); }

namespace {

// sigma extended to the integers: sigma(i) = i outside [1,n].
int z_value(const Permutation& sigma, int i) {
  return (i >= 1 && i <= sigma.size()) ? sigma.value_at(i) : i;
}

}  // namespace

KCode descent_code(const Permutation& sigma, int k) {
  if (k < 1) throw std::invalid_argument("code width must be >= 1");
  KCode c{k, {}};
  c.digits.reserve(static_cast<size_t>(sigma.size()));
  for (int i = 1; i <= sigma.size(); ++i) {
    const int v = sigma.value_at(i);
    int rank = 1;
    for (int t = 1; t < k; ++t)
      if (z_value(sigma, i - t) < v) ++rank;
    c.digits.push_back(rank);
  }
  return c;
}

KCode recoil_code(const Permutation& sigma, int k) { return descent_code(inverse(sigma), k); }

KCode recoil_code_by_restriction(const Permutation& sigma, int k) {
  if (k < 1) throw std::invalid_argument("code width must be >= 1");
  const int n = sigma.size();
  KCode c{k, {}};
  c.digits.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    // Values below 1 sit at their own (negative) positions, before the word.
    int d = 1 + std::max(0, k - i);
    const int pos_i = sigma.position_of(i);
    for (int v = std::max(1, i - k + 1); v < i; ++v)
      if (sigma.position_of(v) < pos_i) ++d;
    c.digits.push_back(d);
  }
  return c;
}

KCode code_from_pattern(const KPattern& p) {
  if (!kpattern_is_consistent(p)) throw std::invalid_argument("inconsistent window pattern");
  if (p.windows.empty()) throw std::invalid_argument("pattern must contain at least one window");
  KCode c = descent_code(p.windows.front(), p.k);
  for (size_t j = 1; j < p.windows.size(); ++j) {
    // Windows are standardized, so the last letter equals its own rank.
    c.digits.push_back(p.windows[j].word().back());
  }
  return c;
}

KPattern pattern_from_code(const KCode& code) {
  if (!code.valid()) throw std::invalid_argument("invalid code");
  const int k = code.k;
  const int n = code.size();
  if (n < k) throw std::invalid_argument("pattern requires |code| >= k");
  KPattern p;
  p.k = k;
  // Codes of length k index singleton classes, so the first window is the
  // inverse of the insertion construction for the recoil prefix.
  KCode prefix{k, {code.digits.begin(), code.digits.begin() + k}};
  p.windows.push_back(inverse(min_rep(prefix)));
  for (int j = k; j < n; ++j) {
    const int d = code.digits[static_cast<size_t>(j)];
    const Word& prev = p.windows.back().word();
    // Restandardize the tail before inserting the new letter at rank d.
    Word tail(prev.begin() + 1, prev.end());
    Word next = standardize(tail).word();
    for (int& v : next)
      if (v >= d) ++v;
    next.push_back(d);
    p.windows.push_back(Permutation(std::move(next)));
  }
  return p;
}

std::vector<KCode> enumerate_codes(int k, int n) {
  if (k < 1 || n < 0) throw std::invalid_argument("enumerate_codes requires k >= 1, n >= 0");
  auto lo = [&](int l) { return std::max(k - l, 1); };  // 0-based l
  std::vector<int> digits(static_cast<size_t>(n));
  for (int l = 0; l < n; ++l) digits[static_cast<size_t>(l)] = lo(l);
  std::vector<KCode> out;
  while (true) {
    out.push_back(KCode{k, digits});
    int l = n - 1;
    while (l >= 0 && digits[static_cast<size_t>(l)] == k) {
      digits[static_cast<size_t>(l)] = lo(l);
      --l;
    }
    if (l < 0) break;
    ++digits[static_cast<size_t>(l)];
  }
  return out;
}

Int count_codes(int k, int n) {
  if (k < 1 || n < 0) throw std::invalid_argument("count_codes requires k >= 1, n >= 0");
  Int c = 1;
  for (int l = 2; l <= std::min(n, k); ++l) c *= l;
  for (int l = k; l < n; ++l) c *= k;
  return c;
}

namespace {

Permutation build_rep(const KCode& code, bool minimal) {
  if (!code.valid()) throw std::invalid_argument("invalid code");
  const int k = code.k;
  Word word;
  for (int r = 1; r <= code.size(); ++r) {
    const int d = code.digits[static_cast<size_t>(r - 1)];
    const int virt = std::max(0, k - r);
    const int j = d - 1 - virt;  // real values of [r-k+1, r-1] left of r
    std::vector<int> vpos;       // 0-based positions of those values, ascending
    for (size_t i = 0; i < word.size(); ++i)
      if (word[i] >= r - k + 1) vpos.push_back(static_cast<int>(i));
    const int m = static_cast<int>(vpos.size());
    int at;
    if (minimal)
      at = (j == m) ? static_cast<int>(word.size()) : vpos[static_cast<size_t>(j)];
    else
      at = (j == 0) ? 0 : vpos[static_cast<size_t>(j - 1)] + 1;
    word.insert(word.begin() + at, r);
  }
  return Permutation(std::move(word));
}

}  // namespace

Permutation min_rep(const KCode& code) { return build_rep(code, true); }
Permutation max_rep(const KCode& code) { return build_rep(code, false); }

bool is_min_element(const Permutation& sigma, int k) {
  for (int i = 1; i < sigma.size(); ++i)
    if (sigma.value_at(i) - sigma.value_at(i + 1) >= k) return false;
  return true;
}

bool is_max_element(const Permutation& sigma, int k) {
  for (int i = 1; i < sigma.size(); ++i)
    if (sigma.value_at(i + 1) - sigma.value_at(i) >= k) return false;
  return true;
}

EquivClass recoil_class(const Permutation& sigma, int k) {
  if (k < 1) throw std::invalid_argument("code width must be >= 1");
  std::set<Permutation> seen{sigma};
  std::queue<Permutation> todo;
  todo.push(sigma);
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop();
    for (int i = 0; i + 1 < cur.size(); ++i) {
      const int a = cur.word()[static_cast<size_t>(i)];
      const int b = cur.word()[static_cast<size_t>(i + 1)];
      if (std::abs(a - b) >= k) {
        Word w = cur.word();
        std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(i + 1)]);
        Permutation nb(std::move(w));
        if (seen.insert(nb).second) todo.push(nb);
      }
    }
  }
  EquivClass cls;
  cls.k = k;
  cls.kind = ClassKind::Recoil;
  cls.code = recoil_code(sigma, k);
  cls.members.assign(seen.begin(), seen.end());
  cls.min_rep = cls.members.front();
  cls.max_rep = cls.members.back();
  return cls;
}

EquivClass descent_class(const Permutation& sigma, int k) {
  EquivClass rc = recoil_class(inverse(sigma), k);
  EquivClass cls;
  cls.k = k;
  cls.kind = ClassKind::Descent;
  cls.code = rc.code;
  for (const auto& m : rc.members) cls.members.push_back(inverse(m));
  std::sort(cls.members.begin(), cls.members.end());
  // Left-weak extremes of the descent class are the inverses of the
  // right-weak extremes of the recoil class.
  cls.min_rep = inverse(rc.min_rep);
  cls.max_rep = inverse(rc.max_rep);
  return cls;
}

std::vector<EquivClass> classes_of_sn(int n, int k, ClassKind kind) {
  if (n < 0 || k < 1) throw std::invalid_argument("classes_of_sn requires n >= 0, k >= 1");
  std::map<KCode, std::vector<Permutation>> groups;
  for (const auto& p : PermutationRange(n)) {
    KCode c = (kind == ClassKind::Recoil) ? recoil_code(p, k) : descent_code(p, k);
    groups[c].push_back(p);
  }
  std::vector<EquivClass> out;
  for (auto& [code, members] : groups) {
    EquivClass cls;
    cls.k = k;
    cls.kind = kind;
    cls.code = code;
    cls.members = std::move(members);  // lex order: generated in lex order
    if (kind == ClassKind::Recoil) {
      cls.min_rep = min_rep(code);
      cls.max_rep = max_rep(code);
    } else {
      cls.min_rep = inverse(min_rep(code));
      cls.max_rep = inverse(max_rep(code));
    }
    out.push_back(std::move(cls));
  }
  return out;
}

bool words_equivalent(const Word& u, const Word& v, int k) {
  Word su = u, sv = v;
  std::sort(su.begin(), su.end());
  std::sort(sv.begin(), sv.end());
  if (su != sv) return false;
  return recoil_code(standardize(u), k) == recoil_code(standardize(v), k);
}

}  // namespace dsym
