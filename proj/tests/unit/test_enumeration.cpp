#include <doctest.h>

#include <cstdlib>
#include <json.hpp>

#include "oracle.hpp"
#include "vincular/enumeration.hpp"
#include "vincular/errors.hpp"

using namespace vincular;

TEST_SUITE("enumeration") {
  TEST_CASE("count_avoiders examples") {
    for (const Pattern& p : oracle::census_universe()) CHECK(count_avoiders(3, 5, p) == 125);
    CHECK(count_avoiders(4, 2, parse_pattern("11-12")) == 15);
    CHECK(count_avoiders(4, 2, parse_pattern("11-21")) == 15);
    CHECK(count_avoiders(3, 9, parse_pattern("1-34-2")) == 729);
    CHECK(count_avoiders(0, 4, parse_pattern("132-1")) == 1);
  }

  TEST_CASE("empty alphabet") {
    CHECK(count_avoiders(0, 0, parse_pattern("1")) == 1);
    CHECK(count_avoiders(3, 0, parse_pattern("12")) == 0);
    CHECK(avoider_counts_upto(3, 0, parse_pattern("12")) == std::vector<Count>{1, 0, 0, 0});
  }

  TEST_CASE("counts agree with the word-enumeration oracle") {
    for (const Pattern& p : oracle::census_universe()) {
      for (int k = 1; k <= 3; ++k) {
        auto fast = avoider_counts_upto(6, k, p);
        for (int n = 0; n <= 6; ++n) {
          CHECK_MESSAGE(fast[static_cast<std::size_t>(n)] == oracle::count_avoiders(n, k, p),
                        format_pattern(p) << " n=" << n << " k=" << k);
        }
      }
    }
  }

  TEST_CASE("prefix-refined counts") {
    const Pattern p = parse_pattern("11-12");
    CHECK(count_avoiders_prefix(4, 2, p, Word::parse("2", 2)) == 8);
    CHECK(count_avoiders_prefix(4, 2, p, Word::parse("1", 2)) == 7);
    CHECK(count_avoiders_prefix(4, 2, p, Word::parse("1112", 2)) == 0);
    CHECK(count_avoiders_prefix(5, 2, p, Word::parse("1112", 2)) == 0);
    CHECK(count_avoiders_prefix(4, 2, p, Word{}) == 15);
    CHECK_THROWS_AS(count_avoiders_prefix(2, 2, p, Word::parse("111", 2)), ValidationError);
    CHECK_THROWS_AS(count_avoiders_prefix(4, 2, p, Word::parse("3", 3)), ValidationError);
    for (const Pattern& q : oracle::census_universe()) {
      for (int n = 1; n <= 5; ++n) {
        Count sum = 0;
        for (Letter a = 1; a <= 3; ++a) sum += count_avoiders_prefix(n, 3, q, Word({a}, 3));
        CHECK(sum == count_avoiders(n, 3, q));
      }
    }
  }

  TEST_CASE("content-refined counts") {
    const Pattern p = parse_pattern("11-12");
    CHECK(count_avoiders_by_content(4, 2, p, {3, 1}) == 3);
    CHECK(count_avoiders_by_content(4, 2, p, {4, 0}) == 1);
    CHECK(count_avoiders_by_content(4, 2, parse_pattern("11-11"), {4, 0}) == 0);
    CHECK_THROWS_AS(count_avoiders_by_content(4, 2, p, {2, 1}), ValidationError);
    CHECK_THROWS_AS(count_avoiders_by_content(4, 2, p, {2, 1, 1}), ValidationError);
    for (const Pattern& q : oracle::census_universe()) {
      Count sum = 0;
      for (const auto& [m, c] : avoider_counts_by_content(5, 3, q)) sum += c;
      CHECK(sum == count_avoiders(5, 3, q));
    }
    const auto by = avoider_counts_by_content(5, 3, parse_pattern("12-13"));
    for (const auto& [m, c] : by) CHECK(count_avoiders_by_content(5, 3, parse_pattern("12-13"), m) == c);
  }

  TEST_CASE("first-letter table") {
    const Pattern p = parse_pattern("131-2");
    auto t = avoider_counts_by_first_letter(6, 4, p);
    for (int n = 1; n <= 6; ++n) {
      for (Letter a = 1; a <= 4; ++a) {
        CHECK(t[static_cast<std::size_t>(n)][static_cast<std::size_t>(a - 1)] ==
              count_avoiders_prefix(n, 4, p, Word({a}, 4)));
      }
    }
  }

  TEST_CASE("guardrail") {
    Guardrail g{100};
    CHECK_NOTHROW(g.check(6, 2));
    CHECK_THROWS_AS(g.check(7, 2), GuardrailError);
    try {
      count_avoiders(7, 2, parse_pattern("12"), g);
      FAIL("expected a guardrail error");
    } catch (const GuardrailError& e) {
      CHECK(e.bound() == 100);
    }
    ::setenv("VINCULAR_GUARDRAIL", "12345", 1);
    CHECK(Guardrail::from_env().max_cell == 12345);
    ::setenv("VINCULAR_GUARDRAIL", "junk", 1);
    CHECK(Guardrail::from_env().max_cell == Guardrail{}.max_cell);
    ::unsetenv("VINCULAR_GUARDRAIL");
    CHECK(Guardrail::from_env().max_cell == 100000000ULL);
  }

  TEST_CASE("count table invariants and JSON lines") {
    const Pattern p = parse_pattern("132-1");
    const CountTable t = count_table(p, 6, 4);
    for (int k = 1; k <= 4; ++k) {
      CHECK(t.at(0, k) == 1);
      for (int n = 0; n < 4; ++n) {
        Count pow = 1;
        for (int i = 0; i < n; ++i) pow *= static_cast<Count>(k);
        CHECK(t.at(n, k) == pow);
      }
      for (int n = 0; n <= 6; ++n) {
        if (k < 4) CHECK(t.at(n, k) <= t.at(n, k + 1));
        if (n < 6) CHECK(t.at(n + 1, k) <= static_cast<Count>(k) * t.at(n, k));
      }
    }
    const std::string lines = to_jsonl(t);
    std::size_t count = 0;
    std::size_t start = 0;
    while (start < lines.size()) {
      const std::size_t end = lines.find('\n', start);
      auto j = nlohmann::json::parse(lines.substr(start, end - start));
      CHECK(j["pattern"] == "132-1");
      CHECK(j["count"].get<Count>() == t.at(j["n"].get<int>(), j["k"].get<int>()));
      ++count;
      start = end + 1;
    }
    CHECK(count == t.entries.size());
  }

  TEST_CASE("verify_equivalence examples") {
    auto a = verify_equivalence(parse_pattern("132-1"), parse_pattern("132-2"), 8, 4);
    CHECK(a.passed());
    CHECK(a.cells_compared == 36);
    auto b = verify_equivalence(parse_pattern("131-2"), parse_pattern("121-3"), 8, 4,
                                Refinement::FirstLetter);
    CHECK(b.passed());
    auto c = verify_equivalence(parse_pattern("11-12"), parse_pattern("11-23"), 8, 4);
    CHECK_FALSE(c.passed());
    CHECK(c.summary().find("differ") != std::string::npos);
    auto d = verify_equivalence(parse_pattern("11-12"), parse_pattern("11-21"), 6, 3,
                                Refinement::Content);
    CHECK(d.passed());
    // Complement keeps totals but moves first letters.
    CHECK(verify_equivalence(parse_pattern("12-3"), parse_pattern("32-1"), 7, 3).passed());
    auto e = verify_equivalence(parse_pattern("12-3"), parse_pattern("32-1"), 7, 3,
                                Refinement::FirstLetter);
    CHECK_FALSE(e.passed());
  }

  TEST_CASE("wilf_classify") {
    auto single = wilf_classify({parse_pattern("12-3")}, 5, 3);
    CHECK(single.classes.size() == 1);
    CHECK(single.singleton(0));

    const auto universe = all_patterns(std::vector<int>{2, 2});
    auto small = wilf_classify(universe, 6, 3);
    auto large = wilf_classify(universe, 7, 4);
    // Enlarging the range only splits classes.
    for (const auto& cls : large.classes) {
      for (std::size_t i : cls) CHECK(small.class_of(i) == small.class_of(cls.front()));
    }
    // Symmetry orbits refine classes.
    for (const auto& orbit : large.symmetry_orbits) {
      for (std::size_t i : orbit) CHECK(large.class_of(i) == large.class_of(orbit.front()));
    }
    auto again = wilf_classify(universe, 7, 4);
    CHECK(again.classes == large.classes);
    CHECK(again.signatures == large.signatures);

    const std::size_t a = 0;  // 11-11
    const std::size_t b = 1;  // 11-12
    auto w = large.witness(a, b);
    REQUIRE(w.has_value());
    CHECK(large.signatures[a] != large.signatures[b]);

    auto j = nlohmann::json::parse(to_json(large));
    CHECK(j["n_max"] == 7);
    CHECK(j["classes"].size() == large.classes.size());
  }
}
