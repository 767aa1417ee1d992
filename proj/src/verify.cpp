#include "dsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "dsym/dsym.hpp"
#include "dsym/fixtures.hpp"
#include "dsym/fqsym.hpp"
#include "dsym/kcode.hpp"
#include "dsym/perm.hpp"
#include "dsym/render.hpp"
#include "dsym/series.hpp"
#include "dsym/stats.hpp"

namespace dsym {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

using Witness = std::optional<std::string>;

struct Check {
  std::string id;
  std::string params;
  std::function<Witness()> fn;
};

int cap(int spec_n, const VerifyOptions& o) {
  return o.max_n < 0 ? spec_n : std::min(spec_n, o.max_n);
}

std::vector<int> widths(std::initializer_list<int> spec, const VerifyOptions& o) {
  std::vector<int> out;
  for (int k : spec)
    if (std::find(o.ks.begin(), o.ks.end(), k) != o.ks.end()) out.push_back(k);
  return out;
}

std::string show(const std::vector<int>& ks) {
  std::ostringstream os;
  os << "k=";
  for (size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
  return os.str();
}

template <typename... Args>
std::string fmt(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

// ---------------------------------------------------------------- codes ---

Witness check_standardize_idempotent() {
  // Exhaustive over {1,2,3}^(<=6), then deterministic random samples.
  std::vector<Word> words{{}};
  for (int len = 1; len <= 6; ++len) {
    Word w(static_cast<size_t>(len), 1);
    while (true) {
      words.push_back(w);
      int i = len - 1;
      while (i >= 0 && w[static_cast<size_t>(i)] == 3) w[static_cast<size_t>(i--)] = 1;
      if (i < 0) break;
      ++w[static_cast<size_t>(i)];
    }
  }
  std::mt19937 rng(12345);
  for (int s = 0; s < 200; ++s) {
    std::uniform_int_distribution<int> len_d(0, 10), letter_d(1, 5);
    Word w(static_cast<size_t>(len_d(rng)));
    for (int& v : w) v = letter_d(rng);
    words.push_back(w);
  }
  for (const Word& w : words) {
    Permutation s = standardize(w);
    if (standardize(s.word()) != s)
      return fmt("standardize not idempotent on a word of length ", w.size());
  }
  return std::nullopt;
}

Witness check_code_fixtures() {
  for (const auto& fx : fixtures::kDescentCodeFixtures) {
    KCode got = descent_code(parse_permutation(fx.perm), fx.k);
    if (to_string(got) != fx.code)
      return fmt("DC_", fx.k, "(", fx.perm, ") = ", to_string(got), ", expected ", fx.code);
  }
  const auto& rfx = fixtures::kRecoilCodeFixture;
  if (to_string(recoil_code(parse_permutation(rfx.perm), rfx.k)) != rfx.code)
    return fmt("RC_", rfx.k, "(", rfx.perm, ") mismatch");
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 6; ++n) {
      KCode c = descent_code(Permutation::identity(n), k);
      if (c.digits != std::vector<int>(static_cast<size_t>(n), k))
        return fmt("DC_", k, "(identity_", n, ") is not k^n");
    }
  return std::nullopt;
}

Witness check_recoil_two_routes(const VerifyOptions& o) {
  for (int k : widths({1, 2, 3, 4, 5}, o))
    for (int n = 0; n <= cap(7, o); ++n)
      for (const auto& p : PermutationRange(n))
        if (recoil_code(p, k) != recoil_code_by_restriction(p, k))
          return fmt("routes disagree on ", p, " at k=", k);
  return std::nullopt;
}

Witness check_window_characterization(const VerifyOptions& o) {
  for (int k : widths({2, 3, 4}, o))
    for (int n = k; n <= cap(6, o); ++n) {
      std::map<KCode, std::vector<Permutation>> by_code;
      std::map<std::vector<Permutation>, std::vector<Permutation>> by_windows;
      for (const auto& p : PermutationRange(n)) {
        by_code[recoil_code(p, k)].push_back(p);
        std::vector<Permutation> wins;
        for (int i = 1; i + k - 1 <= n; ++i)
          wins.push_back(standardize(restrict_to_values(p, i, i + k - 1)));
        by_windows[wins].push_back(p);
      }
      std::set<std::vector<Permutation>> part1, part2;
      for (auto& [c, v] : by_code) part1.insert(v);
      for (auto& [w, v] : by_windows) part2.insert(v);
      if (part1 != part2)
        return fmt("code and value-window partitions differ at n=", n, " k=", k);
    }
  return std::nullopt;
}

Witness check_pattern_roundtrip(const VerifyOptions& o) {
  {
    KCode code = parse_code(fixtures::kWindowCode85736124, 3);
    KPattern pat = pattern_from_code(code);
    std::vector<std::string> got;
    for (const auto& w : pat.windows) got.push_back(to_string(w));
    if (got != fixtures::kWindowPattern85736124) return fmt("pattern of ", code, " mismatch");
    if (code_from_pattern(pat) != code) return fmt("code of recovered pattern mismatch");
  }
  for (int k : widths({2, 3, 4}, o))
    for (int n = k; n <= cap(7, o); ++n)
      for (const auto& p : PermutationRange(n)) {
        KPattern direct = window_patterns(p, k);
        if (!kpattern_is_consistent(direct)) return fmt("inconsistent pattern for ", p);
        KCode code = descent_code(p, k);
        KPattern recovered = pattern_from_code(code);
        if (recovered.windows != direct.windows)
          return fmt("pattern round trip failed for ", p, " at k=", k);
        if (code_from_pattern(direct) != code)
          return fmt("code_from_pattern failed for ", p, " at k=", k);
      }
  return std::nullopt;
}

Witness check_code_counts(const VerifyOptions& o) {
  for (int k : widths({1, 2, 3, 4, 5}, o))
    for (int n = 0; n <= cap(8, o); ++n) {
      std::set<KCode> brute;
      for (const auto& p : PermutationRange(n)) brute.insert(recoil_code(p, k));
      std::vector<KCode> enumerated = enumerate_codes(k, n);
      if (!std::is_sorted(enumerated.begin(), enumerated.end()))
        return fmt("enumerate_codes not sorted at k=", k, " n=", n);
      for (const auto& c : enumerated)
        if (!c.valid()) return fmt("enumerate_codes emitted an invalid code at k=", k);
      if (Int(brute.size()) != count_codes(k, n))
        return fmt("count_codes(", k, ",", n, ") != brute-force distinct codes");
      if (enumerated.size() != brute.size() ||
          !std::equal(enumerated.begin(), enumerated.end(), brute.begin()))
        return fmt("enumerate_codes(", k, ",", n, ") disagrees with brute force");
    }
  return std::nullopt;
}

Witness check_k2_descents(const VerifyOptions& o) {
  for (int n = 0; n <= cap(7, o); ++n)
    for (const auto& p : PermutationRange(n)) {
      KCode c = descent_code(p, 2);
      for (int i = 1; i < n; ++i) {
        const bool descent = p.value_at(i) > p.value_at(i + 1);
        if ((c.digits[static_cast<size_t>(i)] == 1) != descent)
          return fmt("DC_2 digit ", i + 1, " of ", p, " does not mark the descent");
      }
    }
  return std::nullopt;
}

Witness check_refinement(const VerifyOptions& o) {
  const std::vector<std::pair<int, int>> pairs{{2, 3}, {3, 4}, {2, 4}};
  for (auto [k, l] : pairs)
    for (int n = 0; n <= cap(7, o); ++n) {
      std::map<KCode, KCode> coarse;  // DC_l -> DC_k
      for (const auto& p : PermutationRange(n)) {
        KCode cl = descent_code(p, l);
        KCode ck = descent_code(p, k);
        auto [it, fresh] = coarse.emplace(cl, ck);
        if (!fresh && it->second != ck)
          return fmt("equal DC_", l, " but different DC_", k, " at ", p);
      }
    }
  return std::nullopt;
}

Witness check_minmax_reps(const VerifyOptions& o) {
  for (int k : widths({1, 2, 3, 4, 5}, o))
    for (int n = 0; n <= cap(8, o); ++n)
      for (const auto& c : enumerate_codes(k, n)) {
        Permutation lo = min_rep(c), hi = max_rep(c);
        if (recoil_code(lo, k) != c) return fmt("recoil_code(min_rep(", c, ")) != code");
        if (recoil_code(hi, k) != c) return fmt("recoil_code(max_rep(", c, ")) != code");
        if (!is_min_element(lo, k)) return fmt("min_rep(", c, ") fails the minimality scan");
        if (!is_max_element(hi, k)) return fmt("max_rep(", c, ") fails the maximality scan");
      }
  // The maximal elements are the complements of the minimal ones.
  for (int k : widths({2, 3, 4}, o))
    for (int n = 0; n <= cap(7, o); ++n) {
      std::set<Permutation> maxs, comp_mins;
      for (const auto& p : PermutationRange(n)) {
        if (is_max_element(p, k)) maxs.insert(p);
        if (is_min_element(p, k)) comp_mins.insert(complement(p));
      }
      if (maxs != comp_mins) return fmt("complement symmetry fails at n=", n, " k=", k);
    }
  return std::nullopt;
}

// -------------------------------------------------------------- classes ---

Witness check_exchange_classes(const VerifyOptions& o) {
  for (int k : widths({2, 3, 4}, o))
    for (int n = 0; n <= cap(7, o); ++n)
      for (const auto& cls : classes_of_sn(n, k, ClassKind::Recoil)) {
        EquivClass bfs = recoil_class(cls.members.front(), k);
        if (bfs.members != cls.members)
          return fmt("exchange closure differs from code class ", cls.code, " at n=", n);
      }
  return std::nullopt;
}

Witness check_class_partition(const VerifyOptions& o) {
  for (int k : widths({1, 2, 3, 4}, o))
    for (int n = 0; n <= cap(7, o); ++n) {
      auto classes = classes_of_sn(n, k, ClassKind::Recoil);
      size_t total = 0;
      for (const auto& c : classes) total += c.members.size();
      Int fact = 1;
      for (int i = 2; i <= n; ++i) fact *= i;
      if (Int(total) != fact) return fmt("members of S_", n, " classes do not sum to n!");
      if (Int(classes.size()) != count_codes(k, n))
        return fmt("class count differs from count_codes at n=", n, " k=", k);
      if (!std::is_sorted(classes.begin(), classes.end(),
                          [](const EquivClass& a, const EquivClass& b) { return a.code < b.code; }))
        return fmt("classes not sorted by code at n=", n, " k=", k);
    }
  return std::nullopt;
}

Witness check_s4_fixtures() {
  auto codes_of = [](int n) {
    std::vector<std::string> out;
    for (const auto& p : PermutationRange(n)) out.push_back(to_string(recoil_code(p, 3)));
    return out;
  };
  if (codes_of(3) != fixtures::kS3RecoilCodes) return fmt("3-recoil codes of S_3 mismatch");
  if (codes_of(4) != fixtures::kS4RecoilCodes) return fmt("3-recoil codes of S_4 mismatch");

  auto classes = classes_of_sn(4, 3, ClassKind::Recoil);
  if (classes.size() != 18) return fmt("expected 18 classes in S_4, got ", classes.size());
  std::vector<std::pair<std::string, std::string>> doubletons;
  for (const auto& c : classes) {
    if (c.members.size() == 1) continue;
    if (c.members.size() != 2) return fmt("class ", c.code, " has unexpected size");
    doubletons.emplace_back(to_string(c.members[0]), to_string(c.members[1]));
  }
  auto expected = fixtures::kS4DoubletonClasses;
  std::sort(doubletons.begin(), doubletons.end());
  std::sort(expected.begin(), expected.end());
  if (doubletons != expected) return fmt("the six doubleton classes of S_4 mismatch");

  for (const auto& c : classes_of_sn(3, 3, ClassKind::Recoil))
    if (c.members.size() != 1) return fmt("classes of S_3 must be singletons");
  auto empty_classes = classes_of_sn(0, 3, ClassKind::Recoil);
  if (empty_classes.size() != 1 || empty_classes[0].members != std::vector<Permutation>{Permutation()})
    return fmt("S_0 must form one class holding the empty permutation");
  return std::nullopt;
}

Witness check_class_extremes(const VerifyOptions& o) {
  for (int k : widths({2, 3, 4}, o))
    for (int n = 0; n <= cap(7, o); ++n)
      for (ClassKind kind : {ClassKind::Recoil, ClassKind::Descent})
        for (const auto& cls : classes_of_sn(n, k, kind)) {
          if (cls.min_rep != cls.members.front() || cls.max_rep != cls.members.back())
            return fmt("weak-order extremes are not the lex extremes in class ", cls.code,
                       " (n=", n, ", k=", k, ")");
          const Side side = (kind == ClassKind::Recoil) ? Side::Right : Side::Left;
          for (const auto& m : cls.members)
            if (!weak_leq(cls.min_rep, m, side) || !weak_leq(m, cls.max_rep, side))
              return fmt("member outside [min,max] in class ", cls.code);
          if (kind == ClassKind::Recoil) {
            if (!is_min_element(cls.min_rep, k) || !is_max_element(cls.max_rep, k))
              return fmt("recoil extremes fail the adjacent-gap scan in class ", cls.code);
          }
        }
  // k >= n: all classes are singletons.
  for (int n = 0; n <= cap(6, o); ++n)
    for (const auto& p : PermutationRange(n))
      if (recoil_class(p, std::max(n, 1)).members.size() != 1)
        return fmt("class of ", p, " with k=n is not a singleton");
  return std::nullopt;
}

// ------------------------------------------------------------ intervals ---

Witness check_weak_order_axioms(const VerifyOptions& o) {
  for (int n = 0; n <= cap(5, o); ++n) {
    auto perms = all_permutations(n);
    const size_t m = perms.size();
    for (Side side : {Side::Right, Side::Left}) {
      std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) leq[i][j] = weak_leq(perms[i], perms[j], side);
      for (size_t i = 0; i < m; ++i)
        if (!leq[i][i]) return fmt("weak order not reflexive at n=", n);
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
          if (i != j && leq[i][j] && leq[j][i])
            return fmt("weak order not antisymmetric at n=", n);
          if (!leq[i][j]) continue;
          for (size_t l = 0; l < m; ++l)
            if (leq[j][l] && !leq[i][l]) return fmt("weak order not transitive at n=", n);
        }
      if (side == Side::Left)
        for (size_t i = 0; i < m; ++i)
          for (size_t j = 0; j < m; ++j)
            if (leq[i][j] != weak_leq(inverse(perms[i]), inverse(perms[j]), Side::Right))
              return fmt("left order is not the right order on inverses at n=", n);
    }
  }
  return std::nullopt;
}

Witness check_classes_are_intervals(const VerifyOptions& o) {
  for (int k : widths({2, 3, 4}, o))
    for (int n = 0; n <= cap(7, o); ++n)
      for (ClassKind kind : {ClassKind::Recoil, ClassKind::Descent}) {
        const Side side = (kind == ClassKind::Recoil) ? Side::Right : Side::Left;
        for (const auto& cls : classes_of_sn(n, k, kind))
          if (weak_interval(cls.min_rep, cls.max_rep, side) != cls.members)
            return fmt("class ", cls.code, " is not the weak interval [min,max] (n=", n,
                       ", k=", k, ")");
      }
  return std::nullopt;
}

// --------------------------------------------------------------- ideals ---

Witness check_ideals_union_of_classes(const VerifyOptions& o) {
  for (int k : widths({2, 3, 4}, o))
    for (int n = 0; n <= cap(6, o); ++n) {
      auto classes = classes_of_sn(n, k, ClassKind::Recoil);
      std::map<KCode, const EquivClass*> by_code;
      for (const auto& c : classes) by_code.emplace(c.code, &c);
      for (const auto& cls : classes) {
        {
          auto ideal = weak_ideal(cls.max_rep, Side::Right);
          std::set<Permutation> in_ideal(ideal.begin(), ideal.end());
          std::set<KCode> codes_seen;
          for (const auto& p : ideal) codes_seen.insert(recoil_code(p, k));
          for (const auto& c : codes_seen)
            for (const auto& m : by_code.at(c)->members)
              if (!in_ideal.contains(m))
                return fmt("[id, max(", cls.code, ")] is not a union of classes (n=", n,
                           ", k=", k, ")");
        }
        {
          auto filter = weak_filter(cls.min_rep, Side::Right);
          std::set<Permutation> in_filter(filter.begin(), filter.end());
          std::set<KCode> codes_seen;
          for (const auto& p : filter) codes_seen.insert(recoil_code(p, k));
          for (const auto& c : codes_seen)
            for (const auto& m : by_code.at(c)->members)
              if (!in_filter.contains(m))
                return fmt("[min(", cls.code, "), omega] is not a union of classes (n=", n,
                           ", k=", k, ")");
        }
      }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------- stats ---

MultiPoly poly_from_fixture(int nvars, char symbol, const fixtures::PolyFixture& fx) {
  MultiPoly p;
  p.nvars = nvars;
  p.symbol = symbol;
  for (const auto& [expo, c] : fx) p.add_term(expo, c);
  return p;
}

Witness check_stat_fixtures() {
  if (eulerian_poly(1, 3) != poly_constant(3, 't', 1)) return fmt("E_{1,3} != 1");
  {
    MultiPoly e23;
    e23.nvars = 3;
    e23.symbol = 't';
    e23.add_term({0, 1, 0}, 1);
    e23.add_term({0, 0, 1}, 1);
    if (eulerian_poly(2, 3) != e23) return fmt("E_{2,3} != t2 + t3");
  }
  if (eulerian_poly(3, 3) != poly_from_fixture(3, 't', fixtures::kEulerian33))
    return fmt("E_{3,3} mismatch");
  if (eulerian_poly(4, 3) != poly_from_fixture(3, 't', fixtures::kEulerian43))
    return fmt("E_{4,3} mismatch");
  if (major_poly(1, 3) != poly_constant(3, 'q', 1)) return fmt("M_{1,3} != 1");
  {
    MultiPoly m23;
    m23.nvars = 3;
    m23.symbol = 'q';
    m23.add_term({0, 1, 0}, 1);
    m23.add_term({0, 0, 1}, 1);
    if (major_poly(2, 3) != m23) return fmt("M_{2,3} != q2 + q3");
  }
  if (major_poly(3, 3) != poly_from_fixture(3, 'q', fixtures::kMajor33))
    return fmt("M_{3,3} mismatch");
  return std::nullopt;
}

Witness check_poly_mass_and_degree(const VerifyOptions& o) {
  for (int k : widths({2, 3, 4}, o))
    for (int n = 1; n <= cap(8, o); ++n) {
      Int fact = 1;
      for (int i = 2; i <= n; ++i) fact *= i;
      MultiPoly e = eulerian_poly(n, k);
      MultiPoly m = major_poly(n, k);
      std::vector<VarImage> ones(static_cast<size_t>(k), VarImage(Int(1)));
      if (specialize(e, ones, 0, 't') != poly_constant(0, 't', fact))
        return fmt("E_{", n, ",", k, "} does not sum to n!");
      if (specialize(m, ones, 0, 'q') != poly_constant(0, 'q', fact))
        return fmt("M_{", n, ",", k, "} does not sum to n!");
      for (const auto& [expo, c] : e.terms)
        if (std::accumulate(expo.begin(), expo.end(), 0) != n - 1)
          return fmt("E_{", n, ",", k, "} is not homogeneous of degree n-1");
      for (const auto& [expo, c] : m.terms)
        if (std::accumulate(expo.begin(), expo.end(), 0) != n * (n - 1) / 2)
          return fmt("M_{", n, ",", k, "} is not homogeneous of degree n(n-1)/2");
    }
  return std::nullopt;
}

Witness check_classical_eulerian(const VerifyOptions& o) {
  for (int n = 1; n <= cap(8, o); ++n) {
    // Oracle: histogram of descent counts over S_n.
    MultiPoly expected;
    expected.nvars = 1;
    expected.symbol = 't';
    for (const auto& p : PermutationRange(n)) {
      int des = 0;
      for (int i = 1; i < n; ++i)
        if (p.value_at(i) > p.value_at(i + 1)) ++des;
      expected.add_term({des}, 1);
    }
    // t1 -> t, t2 -> 1.
    MultiPoly got = specialize(eulerian_poly(n, 2), {VarImage(0), VarImage(Int(1))}, 1, 't');
    if (got != expected) return fmt("E_{", n, ",2} specialization differs from descent counts");
    if (n == 4) {
      MultiPoly fx;
      fx.nvars = 1;
      fx.symbol = 't';
      for (size_t d = 0; d < fixtures::kClassicalEulerian4.size(); ++d)
        fx.add_term({static_cast<int>(d)}, fixtures::kClassicalEulerian4[d]);
      if (got != fx) return fmt("classical Eulerian polynomial of degree 4 mismatch");
    }
  }
  return std::nullopt;
}

Witness check_singleton_class_polys(const VerifyOptions& o) {
  // For k >= n every class is a singleton: codes are distinct, the
  // coefficient mass is n!, and each monomial coefficient counts the codes
  // sharing its digit multiset.
  for (int n = 1; n <= cap(6, o); ++n) {
    const int k = n;
    std::set<KCode> codes;
    std::map<std::vector<int>, Int> multiset_counts;
    for (const auto& p : PermutationRange(n)) {
      KCode c = recoil_code(p, k);
      codes.insert(c);
      std::vector<int> expo(static_cast<size_t>(k), 0);
      for (int l = 2; l <= n; ++l) ++expo[static_cast<size_t>(c.digits[static_cast<size_t>(l - 1)] - 1)];
      multiset_counts[expo] += 1;
    }
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (Int(codes.size()) != fact) return fmt("codes of S_", n, " at k=n are not distinct");
    MultiPoly e = eulerian_poly(n, k);
    if (e.terms != multiset_counts)
      return fmt("E_{", n, ",", n, "} coefficients do not count digit multisets");
  }
  return std::nullopt;
}

Witness check_coeff_class_crosscheck(const VerifyOptions& o) {
  if (widths({3}, o).empty()) return std::nullopt;
  for (int n = 1; n <= cap(6, o); ++n) {
    std::map<std::vector<int>, Int> expected;
    for (const auto& cls : classes_of_sn(n, 3, ClassKind::Recoil)) {
      std::vector<int> expo(3, 0);
      for (int l = 2; l <= n; ++l)
        ++expo[static_cast<size_t>(cls.code.digits[static_cast<size_t>(l - 1)] - 1)];
      expected[expo] += Int(cls.members.size());
    }
    if (eulerian_poly(n, 3).terms != expected)
      return fmt("E_{", n, ",3} coefficients disagree with class sizes");
  }
  return std::nullopt;
}

// ----------------------------------------------------------------- hopf ---

HopfElement f_term(const std::string& p) { return basis_term(PermBasis::F, parse_permutation(p)); }
HopfElement g_term(const std::string& p) { return basis_term(PermBasis::G, parse_permutation(p)); }

HopfElement f_sum(const std::vector<std::string>& idx) {
  HopfElement e;
  e.basis = PermBasis::F;
  for (const auto& s : idx) e.add_term(parse_permutation(s), 1);
  return e;
}

TensorElement f_tensor(const std::vector<std::pair<std::string, std::string>>& pairs) {
  TensorElement t;
  t.basis = PermBasis::F;
  for (const auto& [l, r] : pairs) t.add_term(parse_permutation(l), parse_permutation(r), 1);
  return t;
}

Witness check_hopf_product_fixtures() {
  if (f_product(f_term("42531"), f_term("1")) != f_sum(fixtures::kProduct42531x1))
    return fmt("F_42531 * F_1 mismatch");
  if (f_product(f_term("21543"), f_term("1")) != f_sum(fixtures::kProduct21543x1))
    return fmt("F_21543 * F_1 mismatch");
  if (f_product(f_term("1"), f_term("1")) != f_sum({"12", "21"})) return fmt("F_1 * F_1 mismatch");
  if (g_product(g_term("1"), g_term("1")) !=
      hopf_add(g_term("12"), g_term("21")))
    return fmt("G_1 * G_1 mismatch");
  if (g_product(g_term("12"), g_term("1")) !=
      hopf_add(hopf_add(g_term("123"), g_term("132")), g_term("231")))
    return fmt("G_12 * G_1 mismatch");
  return std::nullopt;
}

Witness check_hopf_coproduct_fixtures() {
  if (f_coproduct(f_term("42531")) != f_tensor(fixtures::kCoproduct42531))
    return fmt("Delta F_42531 mismatch");
  if (f_coproduct(f_term("21543")) != f_tensor(fixtures::kCoproduct21543))
    return fmt("Delta F_21543 mismatch");
  if (f_coproduct(f_term("1")) != f_tensor({{"1", "e"}, {"e", "1"}}))
    return fmt("Delta F_1 mismatch");
  TensorElement d21;
  d21.basis = PermBasis::G;
  d21.add_term(parse_permutation("21"), Permutation(), 1);
  d21.add_term(parse_permutation("1"), parse_permutation("1"), 1);
  d21.add_term(Permutation(), parse_permutation("21"), 1);
  if (g_coproduct(g_term("21")) != d21) return fmt("Delta G_21 mismatch");
  TensorElement d312 = g_coproduct(g_term("312"));
  auto it = d312.coeffs.find({parse_permutation("1"), parse_permutation("21")});
  if (it == d312.coeffs.end() || it->second != 1)
    return fmt("Delta G_312 lacks the G_1 (x) G_21 term");
  return std::nullopt;
}

Witness check_associativity(const VerifyOptions& o) {
  const int limit = cap(6, o);
  for (int p = 0; p <= limit; ++p)
    for (int q = 0; p + q <= limit; ++q)
      for (int r = 0; p + q + r <= limit; ++r)
        for (const auto& a : PermutationRange(p))
          for (const auto& b : PermutationRange(q))
            for (const auto& c : PermutationRange(r)) {
              HopfElement fa = basis_term(PermBasis::F, a);
              HopfElement fb = basis_term(PermBasis::F, b);
              HopfElement fc = basis_term(PermBasis::F, c);
              if (f_product(f_product(fa, fb), fc) != f_product(fa, f_product(fb, fc)))
                return fmt("F product not associative on (", a, ", ", b, ", ", c, ")");
              HopfElement ga = basis_term(PermBasis::G, a);
              HopfElement gb = basis_term(PermBasis::G, b);
              HopfElement gc = basis_term(PermBasis::G, c);
              if (g_product(g_product(ga, gb), gc) != g_product(ga, g_product(gb, gc)))
                return fmt("G product not associative on (", a, ", ", b, ", ", c, ")");
            }
  return std::nullopt;
}

using TripleTensor = std::map<std::tuple<Permutation, Permutation, Permutation>, Int>;

TripleTensor coproduct_then_left(const HopfElement& a) {
  TripleTensor out;
  for (const auto& [pr, c] : f_coproduct(a).coeffs) {
    TensorElement left = f_coproduct(basis_term(PermBasis::F, pr.first));
    for (const auto& [lp, lc] : left.coeffs) {
      auto key = std::make_tuple(lp.first, lp.second, pr.second);
      out[key] += c * lc;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

TripleTensor coproduct_then_right(const HopfElement& a) {
  TripleTensor out;
  for (const auto& [pr, c] : f_coproduct(a).coeffs) {
    TensorElement right = f_coproduct(basis_term(PermBasis::F, pr.second));
    for (const auto& [rp, rc] : right.coeffs) {
      auto key = std::make_tuple(pr.first, rp.first, rp.second);
      out[key] += c * rc;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

Witness check_coassociativity(const VerifyOptions& o) {
  for (int n = 0; n <= cap(5, o); ++n)
    for (const auto& p : PermutationRange(n)) {
      HopfElement f = basis_term(PermBasis::F, p);
      if (coproduct_then_left(f) != coproduct_then_right(f))
        return fmt("coassociativity fails on F_", p);
    }
  return std::nullopt;
}

Witness check_bialgebra(const VerifyOptions& o) {
  const int limit = cap(5, o);
  for (int p = 0; p <= limit; ++p)
    for (int q = 0; p + q <= limit; ++q)
      for (const auto& a : PermutationRange(p))
        for (const auto& b : PermutationRange(q)) {
          HopfElement fa = basis_term(PermBasis::F, a);
          HopfElement fb = basis_term(PermBasis::F, b);
          if (f_coproduct(f_product(fa, fb)) !=
              tensor_f_product(f_coproduct(fa), f_coproduct(fb)))
            return fmt("bialgebra compatibility fails on (", a, ", ", b, ")");
        }
  return std::nullopt;
}

Witness check_g_product_bruteforce(const VerifyOptions& o) {
  const int limit = cap(6, o);
  for (int p = 0; p <= limit; ++p)
    for (int q = 0; p + q <= limit; ++q)
      for (const auto& a : PermutationRange(p))
        for (const auto& b : PermutationRange(q)) {
          HopfElement expected;
          expected.basis = PermBasis::G;
          for (const auto& w : PermutationRange(p + q)) {
            Word head(w.word().begin(), w.word().begin() + p);
            Word tail(w.word().begin() + p, w.word().end());
            if (standardize(head) == a && standardize(tail) == b) expected.add_term(w, 1);
          }
          if (g_product(basis_term(PermBasis::G, a), basis_term(PermBasis::G, b)) != expected)
            return fmt("G product differs from convolution brute force on (", a, ", ", b, ")");
        }
  return std::nullopt;
}

Witness check_se_multiplicative(const VerifyOptions& o) {
  const int limit = cap(6, o);
  for (int p = 0; p <= limit; ++p)
    for (int q = 0; p + q <= limit; ++q)
      for (const auto& a : PermutationRange(p))
        for (const auto& b : PermutationRange(q)) {
          if (g_product(s_elem(a), s_elem(b)) != s_elem(s_product_index(a, b)))
            return fmt("S^sigma multiplicativity fails on (", a, ", ", b, ")");
          if (g_product(e_elem(a), e_elem(b)) != e_elem(e_product_index(a, b)))
            return fmt("E^sigma multiplicativity fails on (", a, ", ", b, ")");
        }
  return std::nullopt;
}

Witness check_unit_counit(const VerifyOptions& o) {
  for (int n = 0; n <= cap(5, o); ++n)
    for (const auto& p : PermutationRange(n)) {
      HopfElement f = basis_term(PermBasis::F, p);
      if (f_product(f, hopf_unit(PermBasis::F)) != f || f_product(hopf_unit(PermBasis::F), f) != f)
        return fmt("unit law fails on F_", p);
      // (counit (x) id) Delta = id = (id (x) counit) Delta.
      HopfElement left, right;
      left.basis = right.basis = PermBasis::F;
      for (const auto& [pr, c] : f_coproduct(f).coeffs) {
        if (pr.first.empty()) left.add_term(pr.second, c);
        if (pr.second.empty()) right.add_term(pr.first, c);
      }
      if (left != f || right != f) return fmt("counit law fails on F_", p);
    }
  return std::nullopt;
}

Witness check_g_coproduct_routes(const VerifyOptions& o) {
  for (int n = 0; n <= cap(6, o); ++n)
    for (const auto& p : PermutationRange(n)) {
      HopfElement g = basis_term(PermBasis::G, p);
      if (g_coproduct(g) != g_coproduct_via_duality(g))
        return fmt("the two G coproduct routes disagree on G_", p);
    }
  return std::nullopt;
}

Witness check_basis_conversions(const VerifyOptions& o) {
  for (int n = 0; n <= cap(5, o); ++n)
    for (const auto& p : PermutationRange(n)) {
      HopfElement g = basis_term(PermBasis::G, p);
      if (to_g(g_to_f(g)) != g) return fmt("F/G conversion round trip fails on ", p);
      if (to_g(g_to_s(g)) != g) return fmt("S conversion round trip fails on ", p);
      if (to_g(g_to_e(g)) != g) return fmt("E conversion round trip fails on ", p);
      if (g_to_s(s_elem(p)) != basis_term(PermBasis::S, p))
        return fmt("g_to_s does not recover S^", p);
      if (g_to_e(e_elem(p)) != basis_term(PermBasis::E, p))
        return fmt("g_to_e does not recover E^", p);
    }
  return std::nullopt;
}

// ----------------------------------------------------------------- dsym ---

Witness check_ribbon_fixture() {
  CodeElement got = ribbon_product(parse_code("321", 3), parse_code("3321", 3));
  CodeElement expected;
  expected.k = 3;
  expected.basis = CodeBasis::R;
  for (const auto& s : fixtures::kRibbonProduct321x3321) expected.add_term(parse_code(s, 3), 1);
  if (got != expected) return fmt("R_321 * R_3321 mismatch: got ", to_string(got));
  // Unit and a small k=2 case fixed by hand.
  CodeElement unit_case = ribbon_product(parse_code("321", 3), KCode{3, {}});
  CodeElement just_321;
  just_321.k = 3;
  just_321.basis = CodeBasis::R;
  just_321.add_term(parse_code("321", 3), 1);
  if (unit_case != just_321) return fmt("R_C * R_empty != R_C");
  CodeElement k2 = ribbon_product(parse_code("2", 2), parse_code("2", 2));
  CodeElement k2_expected;
  k2_expected.k = 2;
  k2_expected.basis = CodeBasis::R;
  k2_expected.add_term(parse_code("22", 2), 1);
  k2_expected.add_term(parse_code("21", 2), 1);
  if (k2 != k2_expected) return fmt("R_2 * R_2 mismatch at k=2");
  return std::nullopt;
}

Witness check_closure_products(const VerifyOptions& o) {
  const int limit = cap(6, o);
  for (int k : widths({2, 3}, o))
    for (int p = 0; p <= limit; ++p)
      for (int q = 0; p + q <= limit; ++q)
        for (const auto& a : enumerate_codes(k, p))
          for (const auto& b : enumerate_codes(k, q)) {
            try {
              ribbon_product(a, b);
            } catch (const NotInSubalgebraError& err) {
              return fmt("ribbon product left the subalgebra: ", err.what());
            }
          }
  return std::nullopt;
}

Witness check_closure_coproducts(const VerifyOptions& o) {
  const int limit = cap(5, o);
  for (int k : widths({2, 3}, o))
    for (int n = 0; n <= limit; ++n)
      for (const auto& c : enumerate_codes(k, n)) {
        try {
          ribbon_coproduct(c);
        } catch (const NotInSubalgebraError& err) {
          return fmt("ribbon coproduct left the subalgebra: ", err.what());
        }
      }
  return std::nullopt;
}

Witness check_multiplicative_codes(const VerifyOptions& o) {
  const int limit = cap(6, o);
  for (int k : widths({2, 3}, o))
    for (int p = 0; p <= limit; ++p)
      for (int q = 0; p + q <= limit; ++q)
        for (const auto& a : enumerate_codes(k, p))
          for (const auto& b : enumerate_codes(k, q)) {
            if (g_product(scode_to_g(a), scode_to_g(b)) != scode_to_g(scode_product_index(a, b)))
              return fmt("S^C multiplicativity fails on (", a, ", ", b, ") at k=", k);
            if (g_product(ecode_to_g(a), ecode_to_g(b)) != ecode_to_g(ecode_product_index(a, b)))
              return fmt("E^C multiplicativity fails on (", a, ", ", b, ") at k=", k);
            // Concatenating class maxima must land on a class maximum.
            Permutation top = shifted_concat_top(descent_class_max(a), descent_class_max(b));
            if (!is_max_element(inverse(top), k))
              return fmt("concatenation of class maxima is not a class maximum at k=", k);
          }
  return std::nullopt;
}

Witness check_triangularity(const VerifyOptions& o) {
  const int limit = cap(6, o);
  for (int k : widths({2, 3}, o))
    for (int n = 0; n <= limit; ++n)
      for (const auto& c : enumerate_codes(k, n)) {
        CodeElement rib = scode_expand_in_ribbons(c);
        auto self = rib.coeffs.find(c);
        if (self == rib.coeffs.end() || self->second != 1)
          return fmt("S^", c, " lacks coefficient 1 on its own ribbon");
        for (const auto& [cc, coeff] : rib.coeffs)
          if (coeff != 1) return fmt("S^", c, " has a non-0/1 ribbon coefficient");
        CodeElement back = ribbons_to_scodes(rib);
        CodeElement single;
        single.k = k;
        single.basis = CodeBasis::S;
        single.add_term(c, 1);
        if (back != single) return fmt("ribbon/S change of basis does not round trip at ", c);
      }
  return std::nullopt;
}

Witness check_nsym_k2(const VerifyOptions& o) {
  if (widths({2}, o).empty()) return std::nullopt;
  auto descent_set = [](const KCode& c) {
    std::set<int> d;
    for (int i = 2; i <= c.size(); ++i)
      if (c.digits[static_cast<size_t>(i - 1)] == 1) d.insert(i - 1);
    return d;
  };
  for (int n = 0; n <= cap(6, o); ++n)
    for (const auto& c : enumerate_codes(2, n)) {
      std::set<int> d = descent_set(c);
      std::set<KCode> expected;
      for (const auto& c2 : enumerate_codes(2, n)) {
        std::set<int> d2 = descent_set(c2);
        if (std::includes(d.begin(), d.end(), d2.begin(), d2.end())) expected.insert(c2);
      }
      std::set<KCode> got;
      for (const auto& [cc, coeff] : scode_expand_in_ribbons(c).coeffs) got.insert(cc);
      if (got != expected)
        return fmt("k=2 expansion of S^", c, " is not the coarser-descent-set ribbon sum");
    }
  // Product indices concatenate descent sets with a forced boundary descent.
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      for (const auto& a : enumerate_codes(2, p))
        for (const auto& b : enumerate_codes(2, q)) {
          KCode ab = scode_product_index(a, b);
          std::set<int> expected = descent_set(a);
          expected.insert(p);
          for (int d : descent_set(b)) expected.insert(d + p);
          if (descent_set(ab) != expected)
            return fmt("k=2 product index does not concatenate descent sets");
        }
  return std::nullopt;
}

Witness check_freeness_counts(const VerifyOptions& o) {
  for (int k : widths({2, 3, 4}, o)) {
    PowerSeries g = generator_series(k, cap(8, o));
    for (int n = 1; n <= cap(8, o); ++n) {
      const long long s_count = count_free_generators(n, k, GenSide::S);
      const long long e_count = count_free_generators(n, k, GenSide::E);
      if (s_count != e_count)
        return fmt("generator counts differ between sides at n=", n, " k=", k);
      if (Int(s_count) != g[n])
        return fmt("generator count ", s_count, " differs from series coefficient ", g[n],
                   " at n=", n, " k=", k);
    }
  }
  return std::nullopt;
}

Witness check_inclusion(const VerifyOptions& o) {
  const std::vector<std::pair<int, int>> pairs{{2, 3}, {3, 4}, {2, 4}};
  for (auto [k, l] : pairs)
    for (int n = 0; n <= cap(7, o); ++n) {
      std::map<KCode, KCode> coarse;
      for (const auto& p : PermutationRange(n)) {
        auto [it, fresh] = coarse.emplace(descent_code(p, l), descent_code(p, k));
        if (!fresh && it->second != descent_code(p, k))
          return fmt("DSym^(", k, ") does not contain DSym^(", l, ") at ", p);
      }
    }
  return std::nullopt;
}

// ------------------------------------------------------------- quotient ---

Witness check_quotient_product_welldefined(const VerifyOptions& o) {
  const int limit = cap(6, o);
  for (int k : widths({2, 3}, o))
    for (int p = 0; p <= std::min(limit, 5); ++p)
      for (const auto& cls : classes_of_sn(p, k, ClassKind::Descent)) {
        const Permutation rep = class_representative(cls.code);
        if (rep != cls.members.front())
          return fmt("canonical representative of ", cls.code, " is not the lex-min member");
        for (int q = 0; p + q <= limit; ++q)
          for (const auto& mu : PermutationRange(q)) {
            HopfElement fmu = basis_term(PermBasis::F, mu);
            CodeElement left_base =
                project_to_classes(f_product(basis_term(PermBasis::F, rep), fmu), k);
            CodeElement right_base =
                project_to_classes(f_product(fmu, basis_term(PermBasis::F, rep)), k);
            for (const auto& sigma : cls.members) {
              HopfElement fs = basis_term(PermBasis::F, sigma);
              if (project_to_classes(f_product(fs, fmu), k) != left_base)
                return fmt("left quotient product depends on the representative of ", cls.code);
              if (project_to_classes(f_product(fmu, fs), k) != right_base)
                return fmt("right quotient product depends on the representative of ", cls.code);
            }
          }
      }
  return std::nullopt;
}

Witness check_quotient_coproduct_welldefined(const VerifyOptions& o) {
  for (int k : widths({2, 3}, o))
    for (int n = 0; n <= cap(5, o); ++n)
      for (const auto& cls : classes_of_sn(n, k, ClassKind::Descent)) {
        CodeTensorElement base = fq_coproduct(cls.code);
        for (const auto& sigma : cls.members)
          if (project_to_classes(f_coproduct(basis_term(PermBasis::F, sigma)), k) != base)
            return fmt("quotient coproduct depends on the representative of ", cls.code);
      }
  return std::nullopt;
}

Witness check_quotient_paired_example() {
  const Permutation a = parse_permutation("42531");
  const Permutation b = parse_permutation("21543");
  if (f_class(a, 3) != f_class(b, 3)) return fmt("42531 and 21543 do not share a 3-descent code");
  HopfElement f1 = basis_term(PermBasis::F, parse_permutation("1"));
  CodeElement pa = project_to_classes(f_product(basis_term(PermBasis::F, a), f1), 3);
  CodeElement pb = project_to_classes(f_product(basis_term(PermBasis::F, b), f1), 3);
  if (pa != pb) return fmt("projections of F_42531 F_1 and F_21543 F_1 differ");
  if (fq_product(f_class(a, 3), descent_code(parse_permutation("1"), 3)) != pa)
    return fmt("fq_product disagrees with the direct projection");
  return std::nullopt;
}

Witness check_noncommutativity() {
  for (int p = 1; p <= 2; ++p)
    for (int q = p; p + q <= 4; ++q)
      for (const auto& a : enumerate_codes(3, p))
        for (const auto& b : enumerate_codes(3, q))
          if (fq_product(a, b) != fq_product(b, a)) return std::nullopt;
  return fmt("no noncommutativity witness found for k=3 up to total degree 4");
}

Witness check_quotient_unit(const VerifyOptions& o) {
  for (int k : widths({2, 3}, o))
    for (int n = 0; n <= cap(4, o); ++n)
      for (const auto& c : enumerate_codes(k, n)) {
        CodeElement single;
        single.k = k;
        single.basis = CodeBasis::F;
        single.add_term(c, 1);
        if (fq_product(c, KCode{k, {}}) != single || fq_product(KCode{k, {}}, c) != single)
          return fmt("quotient unit law fails at ", c);
      }
  return std::nullopt;
}

// --------------------------------------------------------------- series ---

Witness check_hilbert_counts(const VerifyOptions& o) {
  for (int k : widths({2, 3, 4}, o)) {
    PowerSeries h = hilbert_series(k, o.order);
    for (int n = 0; n <= std::min(o.order, 8); ++n)
      if (h[n] != count_codes(k, n))
        return fmt("Hilbert coefficient ", n, " differs from count_codes at k=", k);
    for (int n = 0; n <= std::min({o.order, cap(6, o)}); ++n)
      if (Int(classes_of_sn(n, k, ClassKind::Descent).size()) != h[n])
        return fmt("Hilbert coefficient ", n, " differs from the class count at k=", k);
  }
  return std::nullopt;
}

Witness check_generator_series(const VerifyOptions& o) {
  struct Case {
    int k;
    const std::vector<long long>* prefix;
  };
  for (const Case& c : {Case{3, &fixtures::kGenerators3}, Case{4, &fixtures::kGenerators4}}) {
    PowerSeries g = generator_series(c.k, o.order);
    if (g[0] != 0) return fmt("generator series has a constant term at k=", c.k);
    const int upto = std::min<int>(o.order, static_cast<int>(c.prefix->size()));
    for (int n = 1; n <= upto; ++n)
      if (g[n] != (*c.prefix)[static_cast<size_t>(n - 1)])
        return fmt("generator coefficient ", n, " mismatch at k=", c.k, ": got ", g[n]);
  }
  return std::nullopt;
}

Witness check_series_identities(const VerifyOptions& o) {
  for (int k : widths({2, 3, 4, 5}, o)) {
    PowerSeries h = hilbert_series(k, o.order);
    PowerSeries g = generator_series(k, o.order);
    PowerSeries one_minus_g = series_sub(PowerSeries::one(o.order), g);
    if (series_mul(h, one_minus_g) != PowerSeries::one(o.order))
      return fmt("H_k (1 - G_k) != 1 at k=", k);
    if (series_mul(h, series_inverse(h)) != PowerSeries::one(o.order))
      return fmt("H_k / H_k != 1 at k=", k);
  }
  PowerSeries one_minus_t(8);
  one_minus_t[0] = 1;
  one_minus_t[1] = -1;
  PowerSeries geo = series_inverse(one_minus_t);
  for (int i = 0; i <= 8; ++i)
    if (geo[i] != 1) return fmt("1/(1-t) is not the geometric series");
  bool threw = false;
  try {
    PowerSeries bad(3);
    bad[0] = 2;
    series_inverse(bad);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  if (!threw) return fmt("series_inverse accepted a non-unit constant term");
  return std::nullopt;
}

// ----------------------------------------------------------------- glue ---

std::vector<Check> suite_checks(const std::string& name, const VerifyOptions& o) {
  auto K234 = show(widths({2, 3, 4}, o));
  auto K23 = show(widths({2, 3}, o));
  auto K1to5 = show(widths({1, 2, 3, 4, 5}, o));
  if (name == "codes")
    return {
        {"std-idempotent", "alphabet {1,2,3}^<=6 + 200 samples", check_standardize_idempotent},
        {"code-fixtures", "pinned displays", check_code_fixtures},
        {"recoil-two-routes", fmt(K1to5, " n<=", cap(7, o)), [=] { return check_recoil_two_routes(o); }},
        {"window-characterization", fmt(K234, " n<=", cap(6, o)),
         [=] { return check_window_characterization(o); }},
        {"pattern-roundtrip", fmt(K234, " n<=", cap(7, o)), [=] { return check_pattern_roundtrip(o); }},
        {"code-counts", fmt(K1to5, " n<=", cap(8, o)), [=] { return check_code_counts(o); }},
        {"k2-descent-set", fmt("n<=", cap(7, o)), [=] { return check_k2_descents(o); }},
        {"refinement", fmt("(k,l) in {(2,3),(3,4),(2,4)} n<=", cap(7, o)),
         [=] { return check_refinement(o); }},
        {"minmax-reps", fmt(K1to5, " n<=", cap(8, o)), [=] { return check_minmax_reps(o); }},
    };
  if (name == "classes")
    return {
        {"prop2-exchange", fmt(K234, " n<=", cap(7, o)), [=] { return check_exchange_classes(o); }},
        {"class-partition", fmt(show(widths({1, 2, 3, 4}, o)), " n<=", cap(7, o)),
         [=] { return check_class_partition(o); }},
        {"s4-fixtures", "k=3 S_3/S_4", check_s4_fixtures},
        {"class-extremes", fmt(K234, " n<=", cap(7, o)), [=] { return check_class_extremes(o); }},
    };
  if (name == "intervals")
    return {
        {"weak-order-axioms", fmt("n<=", cap(5, o)), [=] { return check_weak_order_axioms(o); }},
        {"prop4-intervals", fmt(K234, " n<=", cap(7, o)),
         [=] { return check_classes_are_intervals(o); }},
    };
  if (name == "ideals")
    return {
        {"prop5-ideals", fmt(K234, " n<=", cap(6, o)),
         [=] { return check_ideals_union_of_classes(o); }},
    };
  if (name == "stats")
    return {
        {"poly-fixtures", "pinned displays", check_stat_fixtures},
        {"poly-mass-degree", fmt(K234, " n<=", cap(8, o)),
         [=] { return check_poly_mass_and_degree(o); }},
        {"classical-eulerian", fmt("n<=", cap(8, o)), [=] { return check_classical_eulerian(o); }},
        {"singleton-codes", fmt("k=n n<=", cap(6, o)),
         [=] { return check_singleton_class_polys(o); }},
        {"coeff-class-crosscheck", fmt("k=3 n<=", cap(6, o)),
         [=] { return check_coeff_class_crosscheck(o); }},
    };
  if (name == "hopf")
    return {
        {"product-fixtures", "pinned displays", check_hopf_product_fixtures},
        {"coproduct-fixtures", "pinned displays", check_hopf_coproduct_fixtures},
        {"associativity", fmt("total degree <= ", cap(6, o)), [=] { return check_associativity(o); }},
        {"coassociativity", fmt("degree <= ", cap(5, o)), [=] { return check_coassociativity(o); }},
        {"bialgebra", fmt("total degree <= ", cap(5, o)), [=] { return check_bialgebra(o); }},
        {"duality-bruteforce", fmt("total degree <= ", cap(6, o)),
         [=] { return check_g_product_bruteforce(o); }},
        {"se-multiplicative", fmt("total degree <= ", cap(6, o)),
         [=] { return check_se_multiplicative(o); }},
        {"unit-counit", fmt("degree <= ", cap(5, o)), [=] { return check_unit_counit(o); }},
        {"gcop-two-routes", fmt("degree <= ", cap(6, o)),
         [=] { return check_g_coproduct_routes(o); }},
        {"basis-conversions", fmt("degree <= ", cap(5, o)),
         [=] { return check_basis_conversions(o); }},
    };
  if (name == "dsym")
    return {
        {"ribbon-fixture", "pinned displays", check_ribbon_fixture},
        {"closure-products", fmt(K23, " total degree <= ", cap(6, o)),
         [=] { return check_closure_products(o); }},
        {"closure-coproducts", fmt(K23, " degree <= ", cap(5, o)),
         [=] { return check_closure_coproducts(o); }},
        {"multiplicative-codes", fmt(K23, " total degree <= ", cap(6, o)),
         [=] { return check_multiplicative_codes(o); }},
        {"triangularity", fmt(K23, " degree <= ", cap(6, o)), [=] { return check_triangularity(o); }},
        {"nsym-k2", fmt("n<=", cap(6, o)), [=] { return check_nsym_k2(o); }},
        {"freeness-counts", fmt(K234, " n<=", cap(8, o)), [=] { return check_freeness_counts(o); }},
        {"inclusion-cor8", fmt("(k,l) pairs n<=", cap(7, o)), [=] { return check_inclusion(o); }},
    };
  if (name == "quotient")
    return {
        {"product-welldefined", fmt(K23, " total degree <= ", cap(6, o)),
         [=] { return check_quotient_product_welldefined(o); }},
        {"coproduct-welldefined", fmt(K23, " degree <= ", cap(5, o)),
         [=] { return check_quotient_coproduct_welldefined(o); }},
        {"paired-example", "k=3 displays", check_quotient_paired_example},
        {"noncommutativity", "k=3 total degree <= 4", check_noncommutativity},
        {"quotient-unit", fmt(K23, " degree <= ", cap(4, o)), [=] { return check_quotient_unit(o); }},
    };
  if (name == "series")
    return {
        {"hilbert-counts", fmt(show(widths({2, 3, 4}, o)), " order=", o.order),
         [=] { return check_hilbert_counts(o); }},
        {"generator-oeis", fmt("k=3,4 order=", o.order), [=] { return check_generator_series(o); }},
        {"series-identities", fmt("order=", o.order), [=] { return check_series_identities(o); }},
    };
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"classes", "codes",  "dsym",     "hopf",  "ideals",
                                              "intervals", "quotient", "series", "stats"};
  return names;
}

VerificationReport run_suite(const std::string& name, const VerifyOptions& opts) {
  VerificationReport report;
  report.suite = name;
  for (auto& check : suite_checks(name, opts)) {
    CheckResult r;
    r.id = check.id;
    r.params = check.params;
    const auto start = std::chrono::steady_clock::now();
    Witness w;
    try {
      w = check.fn();
    } catch (const std::exception& e) {
      w = fmt("exception: ", e.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    r.pass = !w.has_value();
    if (w) r.witness = *w;
    report.checks.push_back(std::move(r));
  }
  return report;
}

std::vector<VerificationReport> run_all_suites(const VerifyOptions& opts) {
  std::vector<VerificationReport> reports;
  for (const auto& name : verify_suite_names()) reports.push_back(run_suite(name, opts));
  return reports;
}

}  // namespace dsym
