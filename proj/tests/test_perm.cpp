#include <doctest.h>

#include <algorithm>
#include <set>

#include "dsym/perm.hpp"

using namespace dsym;

namespace {

Permutation P(const std::string& digits) {
  Word w;
  for (char c : digits) w.push_back(c - '0');
  return Permutation(w);
}

}  // namespace

TEST_CASE("standardize") {
  // std(bbacab) with a=1, b=2, c=3.
  CHECK(standardize({2, 2, 1, 3, 1, 2}) == P("341625"));
  CHECK(standardize({}) == Permutation());
  // On distinct letters standardization is the identity map.
  CHECK(standardize(P("85736124").word()) == P("85736124"));
  // Idempotent on small words.
  for (const Word& w : {Word{1, 1, 1}, Word{3, 1, 2, 1}, Word{5, 5, 2, 9}}) {
    Permutation s = standardize(w);
    CHECK(standardize(s.word()) == s);
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(P("425163")) == P("426135"));
  CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(inverse(P("21543")) == P("21543"));
  for (const auto& p : all_permutations(5)) {
    CHECK(inverse(inverse(p)) == p);
    // Oracle: composing with the inverse yields the identity.
    for (int i = 1; i <= 5; ++i) CHECK(inverse(p).value_at(p.value_at(i)) == i);
  }
}

TEST_CASE("shift and shifted concatenation") {
  CHECK(shift(Word{2, 1}, 1) == Word{3, 2});
  CHECK(shift(Word{1}, 0) == Word{1});
  CHECK(shift(P("312"), 3) == Word{6, 4, 5});
  CHECK_THROWS_AS(shift(Word{1}, -1), std::invalid_argument);
  CHECK(shifted_concat_top(P("21"), P("1")) == P("321"));
  CHECK(shifted_concat_bottom(P("21"), P("1")) == P("213"));
  CHECK(shifted_concat_top(Permutation(), P("312")) == P("312"));
  CHECK(shifted_concat_bottom(P("312"), Permutation()) == P("312"));
}

TEST_CASE("restrict_to_values") {
  CHECK(restrict_to_values(P("425163"), 1, 3) == Word{2, 1, 3});
  CHECK(restrict_to_values(P("425163"), 1, 6) == P("425163").word());
  CHECK(restrict_to_values(P("425163"), 7, 8) == Word{});
}

TEST_CASE("window_patterns") {
  KPattern p = window_patterns(P("85736124"), 3);
  REQUIRE(p.windows.size() == 6);
  CHECK(p.windows[0] == P("312"));
  CHECK(p.windows[1] == P("231"));
  CHECK(p.windows[2] == P("312"));
  CHECK(p.windows[3] == P("231"));
  CHECK(p.windows[4] == P("312"));
  CHECK(p.windows[5] == P("123"));
  CHECK(kpattern_is_consistent(p));

  KPattern id = window_patterns(Permutation::identity(5), 3);
  for (const auto& w : id.windows) CHECK(w == Permutation::identity(3));
  CHECK(id.windows.size() == 3);

  // Oracle: standardize each window by hand.
  KPattern q = window_patterns(P("426135"), 3);
  REQUIRE(q.windows.size() == 4);
  CHECK(q.windows[0] == standardize({4, 2, 6}));
  CHECK(q.windows[0] == P("213"));
  CHECK(q.windows[1] == P("231"));
  CHECK(q.windows[2] == P("312"));
  CHECK(q.windows[3] == P("123"));

  CHECK_THROWS_AS(window_patterns(P("12"), 3), std::invalid_argument);
  CHECK_THROWS_AS(window_patterns(P("12"), 0), std::invalid_argument);
}

TEST_CASE("inversion_set and weak order") {
  using Pair = std::pair<int, int>;
  CHECK(inversion_set(P("2314")) == std::vector<Pair>{{1, 2}, {1, 3}});
  CHECK(inversion_set(Permutation::identity(4)).empty());
  CHECK(inversion_set(Permutation::reversal(4)).size() == 6);

  CHECK(weak_leq(P("2314"), P("2341"), Side::Right));
  CHECK_FALSE(weak_leq(P("2341"), P("2314"), Side::Right));
  for (const auto& p : all_permutations(4)) {
    CHECK(weak_leq(Permutation::identity(4), p, Side::Right));
    CHECK(weak_leq(Permutation::identity(4), p, Side::Left));
  }
  CHECK_THROWS_AS(weak_leq(P("12"), P("123"), Side::Right), std::invalid_argument);
}

TEST_CASE("weak ideals and intervals") {
  auto ideal = weak_ideal(P("321"), Side::Left);
  CHECK(ideal == all_permutations(3));

  CHECK(weak_interval(Permutation::identity(3), Permutation::identity(3), Side::Right) ==
        std::vector<Permutation>{Permutation::identity(3)});

  // Brute-force filter oracle for the ideal below 321 in the right order.
  std::vector<Permutation> expected;
  for (const auto& p : all_permutations(3))
    if (weak_leq(p, P("321"), Side::Right)) expected.push_back(p);
  CHECK(weak_ideal(P("321"), Side::Right) == expected);
  CHECK(expected.size() == 6);

  // Intervals agree with the brute-force filter on S_4, both sides.
  for (Side side : {Side::Right, Side::Left}) {
    auto lo = P("2134"), hi = P("3214");
    if (!weak_leq(lo, hi, side)) continue;
    std::vector<Permutation> want;
    for (const auto& p : all_permutations(4))
      if (weak_leq(lo, p, side) && weak_leq(p, hi, side)) want.push_back(p);
    CHECK(weak_interval(lo, hi, side) == want);
  }

  CHECK_THROWS_AS(weak_interval(P("321"), P("123"), Side::Right), std::invalid_argument);

  // weak_filter is the dual of weak_ideal under complement-reversal; check
  // against the brute-force filter directly.
  std::vector<Permutation> above;
  for (const auto& p : all_permutations(3))
    if (weak_leq(P("213"), p, Side::Left)) above.push_back(p);
  CHECK(weak_filter(P("213"), Side::Left) == above);
}

TEST_CASE("connectivity, mirror, complement") {
  CHECK(is_connected(P("2413")));
  CHECK_FALSE(is_connected(P("1234")));
  CHECK(is_connected(P("1")));
  CHECK_THROWS_AS(is_connected(Permutation()), std::invalid_argument);
  CHECK(mirror(P("312")) == P("213"));
  CHECK(complement(P("2314")) == P("3241"));
  for (const auto& p : all_permutations(4)) {
    CHECK(mirror(mirror(p)) == p);
    CHECK(complement(complement(p)) == p);
  }
}

TEST_CASE("permutation enumeration") {
  CHECK(all_permutations(0) == std::vector<Permutation>{Permutation()});
  CHECK(all_permutations(3) ==
        std::vector<Permutation>{P("123"), P("132"), P("213"), P("231"), P("312"), P("321")});
  auto s4 = all_permutations(4);
  CHECK(s4.size() == 24);
  CHECK(std::is_sorted(s4.begin(), s4.end()));
}

TEST_CASE("permutation validation and rendering") {
  CHECK_THROWS_AS(Permutation(Word{1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(Word{1, 1}), std::invalid_argument);
  CHECK(to_string(P("85736124")) == "85736124");
  CHECK(to_string(Permutation()) == "e");
  Word big(10);
  for (int i = 0; i < 10; ++i) big[static_cast<size_t>(i)] = 10 - i;
  CHECK(to_string(Permutation(big)) == "10,9,8,7,6,5,4,3,2,1");
}
