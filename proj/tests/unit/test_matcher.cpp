#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "vincular/errors.hpp"
#include "vincular/matcher.hpp"

using namespace vincular;

namespace {

std::vector<oracle::Tuple> tuples(const std::vector<Occurrence>& occ) {
  std::vector<oracle::Tuple> out;
  for (const auto& o : occ) out.push_back(o.indices);
  return out;
}

}  // namespace

TEST_SUITE("matcher") {
  TEST_CASE("contains respects adjacency") {
    const Word w = Word::parse("24356213", 6);
    const Pattern p = parse_pattern("1-34-2");
    CHECK(contains(w, p));
    auto occ = tuples(find_occurrences(w, p));
    // 2, 5, 6, 3 at 1-based indices 1, 4, 5, 8.
    CHECK(std::find(occ.begin(), occ.end(), oracle::Tuple{0, 3, 4, 7}) != occ.end());
    // 2, 4, 5, 3: the 4 and 5 are not adjacent.
    CHECK(std::find(occ.begin(), occ.end(), oracle::Tuple{0, 1, 3, 7}) == occ.end());
    CHECK_FALSE(contains(Word::parse("123", 3), parse_pattern("12-34")));
    CHECK_FALSE(contains(Word{}, parse_pattern("1")));
  }

  TEST_CASE("find_occurrences examples") {
    auto a = tuples(find_occurrences(Word::parse("1112", 2), parse_pattern("11-12")));
    CHECK(a == std::vector<oracle::Tuple>{{0, 1, 2, 3}});
    auto b = tuples(find_occurrences(Word::parse("111", 1), parse_pattern("11")));
    CHECK(b == std::vector<oracle::Tuple>{{0, 1}, {1, 2}});
    CHECK(find_occurrences(Word::parse("54321", 5), parse_pattern("12")).empty());
    // Blocks may abut in the word.
    auto c = tuples(find_occurrences(Word::parse("12", 2), parse_pattern("1-2")));
    CHECK(c == std::vector<oracle::Tuple>{{0, 1}});
  }

  TEST_CASE("count_occurrences examples") {
    CHECK(count_occurrences(Word::parse("1112", 2), parse_pattern("11-12")) == 1);
    CHECK(count_occurrences(Word::parse("54321", 5), parse_pattern("12-34")) == 0);
    CHECK(count_occurrences(Word::parse("1111", 1), parse_pattern("11")) == 3);
  }

  TEST_CASE("role-constrained occurrences") {
    const Word w = Word::parse("215562213422116535443543654211", 6);
    auto ones = tuples(find_role_occurrences(w, parse_pattern("11"), RoleConstraint::smallest(1)));
    CHECK(std::find(ones.begin(), ones.end(), oracle::Tuple{12, 13}) != ones.end());
    CHECK(find_role_occurrences(w, parse_pattern("11"), RoleConstraint::smallest(9)).empty());
    CHECK_THROWS_AS(find_role_occurrences(w, parse_pattern("11"), RoleConstraint::at(3, 1)),
                    ValidationError);
    CHECK_THROWS_AS(find_role_occurrences(w, parse_pattern("11"), RoleConstraint::at(0, 1)),
                    ValidationError);

    // The letter playing the 4 of 143-2 is 6 in the underlined 365...4.
    const Word pi = Word::parse("3656264116356143254163423", 6);
    auto six = find_role_occurrences(pi, parse_pattern("143-2"), RoleConstraint::at(2, 6));
    REQUIRE_FALSE(six.empty());
    CHECK(six.front().indices == oracle::Tuple{0, 1, 2, 6});
    auto largest = find_role_occurrences(pi, parse_pattern("143-2"), RoleConstraint::largest(6));
    CHECK(tuples(largest) == tuples(six));
  }

  TEST_CASE("role partition covers every occurrence once") {
    std::mt19937 rng(3);
    const auto universe = oracle::census_universe();
    for (int trial = 0; trial < 200; ++trial) {
      const int k = 2 + static_cast<int>(rng() % 3);
      const Word w(oracle::random_word(rng, 4 + static_cast<int>(rng() % 7), k), k);
      const Pattern& p = universe[rng() % universe.size()];
      const auto all = find_occurrences(w, p);
      for (int mode = 0; mode < 3; ++mode) {
        std::vector<Occurrence> joined;
        for (Letter v = 1; v <= k; ++v) {
          RoleConstraint c = mode == 0   ? RoleConstraint::smallest(v)
                             : mode == 1 ? RoleConstraint::largest(v)
                                         : RoleConstraint::at(2, v);
          auto part = find_role_occurrences(w, p, c);
          joined.insert(joined.end(), part.begin(), part.end());
        }
        std::sort(joined.begin(), joined.end());
        CHECK(joined == all);
      }
    }
  }

  TEST_CASE("agrees with the index-tuple oracle") {
    const auto universe = oracle::census_universe();
    // Exhaustive on short words.
    for (const Pattern& p : universe) {
      for (int n = 0; n <= 5; ++n) {
        oracle::each_word(n, 3, [&](const std::vector<Letter>& w) {
          CHECK(tuples(find_occurrences(std::span<const Letter>(w), p)) == oracle::occurrences(w, p));
        });
      }
    }
    // Sampled up to length 10 over [4].
    std::mt19937 rng(5);
    for (const Pattern& p : universe) {
      for (int trial = 0; trial < 40; ++trial) {
        auto w = oracle::random_word(rng, 6 + static_cast<int>(rng() % 5), 4);
        CHECK(tuples(find_occurrences(std::span<const Letter>(w), p)) == oracle::occurrences(w, p));
      }
    }
  }

  TEST_CASE("reported occurrences are sound on long words") {
    std::mt19937 rng(9);
    const auto universe = oracle::census_universe();
    for (int trial = 0; trial < 300; ++trial) {
      const int k = 1 + static_cast<int>(rng() % 6);
      auto w = oracle::random_word(rng, static_cast<int>(rng() % 21), k);
      const Pattern& p = universe[rng() % universe.size()];
      for (const auto& o : find_occurrences(std::span<const Letter>(w), p)) {
        CHECK(oracle::is_occurrence(w, p, o.indices));
      }
    }
  }

  TEST_CASE("containment is transported by reverse and complement") {
    for (const Pattern& p : oracle::census_universe()) {
      const Pattern pr = reverse(p);
      const Pattern pc = complement(p);
      for (int n = 4; n <= 7; ++n) {
        oracle::each_word(n, 4, [&](const std::vector<Letter>& letters) {
          const Word w(letters, 4);
          const bool in = contains(w, p);
          if (in != contains(reverse(w), pr) || in != contains(complement(w), pc)) {
            FAIL_CHECK(format_pattern(p) << " on " << w.to_string());
          }
        });
      }
    }
  }

  TEST_CASE("contains_ending_at matches a suffix scan") {
    std::mt19937 rng(13);
    const auto universe = oracle::census_universe();
    for (int trial = 0; trial < 300; ++trial) {
      auto w = oracle::random_word(rng, 1 + static_cast<int>(rng() % 9), 3);
      const Pattern& p = universe[rng() % universe.size()];
      const std::size_t last = rng() % w.size();
      bool expected = false;
      for (const auto& t : oracle::occurrences(w, p)) expected = expected || t.back() == last;
      CHECK(contains_ending_at(w, p, last) == expected);
    }
  }
}
