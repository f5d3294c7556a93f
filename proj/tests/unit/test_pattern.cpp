#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "vincular/errors.hpp"
#include "vincular/pattern.hpp"

using namespace vincular;

namespace {

std::vector<Letter> letters_of(const Word& w) { return {w.letters().begin(), w.letters().end()}; }
std::vector<Letter> letters_of(const Pattern& p) { return {p.letters().begin(), p.letters().end()}; }

// Every composition of m.
std::vector<std::vector<int>> compositions(int m) {
  if (m == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= m; ++first) {
    for (auto rest : compositions(m - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  }
  return out;
}

std::vector<Pattern> patterns_up_to(int m_max) {
  std::vector<Pattern> out;
  for (int m = 1; m <= m_max; ++m) {
    for (const auto& type : compositions(m)) {
      auto ps = all_patterns(type);
      out.insert(out.end(), ps.begin(), ps.end());
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("pattern-core") {
  TEST_CASE("reduce relabels by rank") {
    Word r = reduce(Word::parse("694614", 9));
    CHECK(r.to_string() == "342312");
    CHECK(r.alphabet_size() == 4);

    Word e = reduce(Word{});
    CHECK(e.empty());
    CHECK(e.alphabet_size() == 0);

    Word c = reduce(Word::parse("333", 5));
    CHECK(c.to_string() == "111");
    CHECK(c.alphabet_size() == 1);
  }

  TEST_CASE("reduce is idempotent and agrees with the oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 3000; ++trial) {
      const int n = static_cast<int>(rng() % 11);
      const int k = 1 + static_cast<int>(rng() % 5);
      Word w(oracle::random_word(rng, n, k), k);
      Word r = reduce(w);
      CHECK(reduce(r) == r);
      CHECK(letters_of(r) == oracle::reduce(letters_of(w)));
    }
  }

  TEST_CASE("word validation and text forms") {
    CHECK_THROWS_AS(Word({0, 1}, 2), ValidationError);
    CHECK_THROWS_AS(Word({3}, 2), ValidationError);
    CHECK_THROWS_AS(Word::parse("12a", 3), ParseError);
    CHECK_THROWS_AS(Word::parse("10,,3", 12), ParseError);
    Word big = Word::parse("10,3,12", 12);
    CHECK(big.size() == 3);
    CHECK(big[0] == 10);
    CHECK(big.to_string() == "10,3,12");
    CHECK(Word::parse("215", 5).to_string() == "215");
    CHECK(Word::parse("", 4).empty());
  }

  TEST_CASE("parse_pattern reads the dash notation") {
    Pattern p = parse_pattern("1-34-2");
    CHECK(letters_of(p) == std::vector<Letter>{1, 3, 4, 2});
    CHECK(p.adjacencies() == std::vector<int>{2});
    CHECK(p.type() == std::vector<int>{1, 2, 1});

    Pattern s = parse_pattern("1234");
    CHECK(s.adjacencies() == std::vector<int>{1, 2, 3});
    CHECK(s.is_subword());

    Pattern q = parse_pattern("11-21");
    CHECK(letters_of(q) == std::vector<Letter>{1, 1, 2, 1});
    CHECK(q.adjacencies() == std::vector<int>{1, 3});
    CHECK(q.largest() == 2);
  }

  TEST_CASE("parse_pattern diagnostics name the position") {
    auto position_of = [](const char* text) -> std::size_t {
      try {
        parse_pattern(text);
      } catch (const ParseError& e) {
        return e.position();
      }
      return 999;
    };
    CHECK(position_of("-12") == 0);
    CHECK(position_of("12-") == 2);
    CHECK(position_of("1--2") == 2);
    CHECK(position_of("1x2") == 1);
    CHECK(position_of("102") == 1);
    CHECK_THROWS_AS(parse_pattern(""), ParseError);
    CHECK_THROWS_AS(parse_pattern("13-4"), ValidationError);
    CHECK_THROWS_AS(parse_pattern("2"), ValidationError);
  }

  TEST_CASE("pattern construction validates adjacency positions") {
    CHECK_THROWS_AS(Pattern({1, 2}, {2}), ValidationError);
    CHECK_THROWS_AS(Pattern({1, 2}, {0}), ValidationError);
    CHECK_THROWS_AS(Pattern({}, {}), ValidationError);
    CHECK(Pattern::from_blocks({{1, 3}, {4, 2}}) == parse_pattern("13-42"));
    CHECK(Pattern::subword({2, 1, 3}) == parse_pattern("213"));
  }

  TEST_CASE("format_pattern inverts parse_pattern") {
    CHECK(format_pattern(Pattern({1, 3, 4, 2}, {2})) == "1-34-2");
    CHECK(format_pattern(Pattern({1}, {})) == "1");
    for (const Pattern& p : patterns_up_to(5)) {
      const std::string text = format_pattern(p);
      CHECK(parse_pattern(text) == p);
      CHECK(format_pattern(parse_pattern(text)) == text);
    }
  }

  TEST_CASE("reverse and complement") {
    CHECK(format_pattern(reverse(parse_pattern("13-23-4"))) == "4-32-31");
    CHECK(format_pattern(complement(parse_pattern("13-23-4"))) == "42-32-1");
    CHECK(reverse(Word::parse("123", 3)).to_string() == "321");
    CHECK(complement(Word::parse("12", 3)).to_string() == "32");
    for (const Pattern& p : patterns_up_to(5)) {
      CHECK(reverse(reverse(p)) == p);
      CHECK(complement(complement(p)) == p);
      CHECK(reverse(complement(p)) == complement(reverse(p)));
    }
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
      const int k = 1 + static_cast<int>(rng() % 6);
      Word w(oracle::random_word(rng, static_cast<int>(rng() % 9), k), k);
      CHECK(reverse(reverse(w)) == w);
      CHECK(complement(complement(w)) == w);
    }
  }

  TEST_CASE("all_patterns enumerates reduced words per type") {
    auto two = all_patterns(std::vector<int>{1, 1});
    REQUIRE(two.size() == 3);
    CHECK(format_pattern(two[0]) == "1-1");
    CHECK(format_pattern(two[1]) == "1-2");
    CHECK(format_pattern(two[2]) == "2-1");
    CHECK(all_patterns(std::vector<int>{3, 1}).size() == 75);
    CHECK(all_patterns(std::vector<int>{2, 2}).size() == 75);
    auto one = all_patterns(std::vector<int>{1});
    REQUIRE(one.size() == 1);
    CHECK(format_pattern(one[0]) == "1");
    CHECK(reduced_words(4).size() == 75);
    CHECK_THROWS_AS(all_patterns(std::vector<int>{}), ValidationError);
    CHECK_THROWS_AS(all_patterns(std::vector<int>{2, 0}), ValidationError);
  }
}
