#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "vincular/bijections.hpp"
#include "vincular/enumeration.hpp"
#include "vincular/errors.hpp"
#include "vincular/matcher.hpp"

using namespace vincular;

namespace {

std::vector<std::string> texts(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

// Exhaustive bijection check on A_source(n,k).
void check_round_trips(const WordMap& map, int n, int k) {
  std::set<std::vector<Letter>> images;
  Count domain = 0;
  oracle::each_word(n, k, [&](const std::vector<Letter>& letters) {
    const Word w(letters, k);
    if (contains(w, map.source())) return;
    ++domain;
    const Word f = map.forward(w);
    CHECK_FALSE_MESSAGE(contains(f, map.target()), map.tag() << " on " << w.to_string());
    CHECK_MESSAGE(map.inverse(f) == w, map.tag() << " on " << w.to_string());
    images.insert({f.letters().begin(), f.letters().end()});
  });
  CHECK_MESSAGE(images.size() == domain, map.tag() << " n=" << n << " k=" << k);
  CHECK(domain == count_avoiders(n, k, map.source()));
  CHECK(domain == count_avoiders(n, k, map.target()));
}

}  // namespace

TEST_SUITE("bijections") {
  TEST_CASE("governing-block example") {
    auto map = make_map("2.1");
    CHECK(format_pattern(map->source()) == "12-345");
    CHECK(format_pattern(map->target()) == "21-345");
    const Word w = Word::parse("43176783245633254572134521358434", 8);
    const Word f = map->forward(w);
    CHECK(f.to_string() == "13476782345623354571234512358434");
    CHECK(map->inverse(f) == w);
  }

  TEST_CASE("letter-migration example") {
    MapOptions opts;
    opts.sigma = "11";
    auto map = make_map("2.5", opts);
    const Word w = Word::parse("215562213422116535443543654211", 6);
    const MapResult r = map->apply(w, Direction::Forward);
    CHECK(texts(r.stages) ==
          std::vector<std::string>{"215562213422111165354435436542", "215562212234111126535443543654",
                                   "215562212234111126535443453465", "215562212234111125635443453456"});
    CHECK(map->inverse(r.word) == w);
  }

  TEST_CASE("staged swap example lies outside the domain") {
    auto map = make_map("3.3a");
    const Word w = Word::parse("3656264116356143254163423", 6);
    try {
      map->forward(w);
      FAIL("expected a domain error");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("(11,12,13,15)") != std::string::npos);
    }
    const MapResult r = map->apply_unchecked(w, Direction::Forward);
    CHECK(texts(r.stages) == std::vector<std::string>{"3566246113566143254136423",
                                                      "3566246113566143245136423",
                                                      "3566246113566134245136423"});
  }

  TEST_CASE("words with too few letters are fixed") {
    for (const auto& tag : map_tags()) {
      auto map = make_map(tag);
      const int r = map->source().largest();
      oracle::each_word(5, r - 1, [&](const std::vector<Letter>& letters) {
        const Word w(letters, r - 1);
        CHECK(map->forward(w) == w);
      });
      CHECK(map->forward(Word{}) == Word{});
    }
  }

  TEST_CASE("exhaustive round trips on small alphabets") {
    for (const auto& tag : map_tags()) {
      auto map = make_map(tag);
      for (int n = 0; n <= 7; ++n) check_round_trips(*map, n, 4);
    }
    for (const char* sigma : {"1", "12", "21"}) {
      MapOptions o;
      o.sigma = sigma;
      auto map = make_map("2.1", o);
      for (int n = 0; n <= 6; ++n) check_round_trips(*map, n, 4);
    }
    for (const char* sigma : {"1", "12", "21", "121"}) {
      MapOptions o;
      o.sigma = sigma;
      auto map = make_map("2.5", o);
      for (int n = 0; n <= 6; ++n) check_round_trips(*map, n, 4);
    }
  }

  TEST_CASE("maps that claim to keep content do") {
    for (const auto& tag : map_tags()) {
      auto map = make_map(tag);
      if (!map->preserves_content()) continue;
      oracle::each_word(7, 4, [&](const std::vector<Letter>& letters) {
        const Word w(letters, 4);
        if (contains(w, map->source())) return;
        std::vector<Letter> a(letters);
        const Word f = map->forward(w);
        std::vector<Letter> b(f.letters().begin(), f.letters().end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
      });
    }
  }

  TEST_CASE("invalid configurations") {
    MapOptions o;
    o.sigma = "132";
    CHECK_THROWS_AS(make_map("2.1", o), DomainError);
    CHECK_THROWS_AS(make_map("9.9"), ValidationError);
    CHECK_THROWS_AS(rewriter_by_name("shuffle"), ValidationError);
    auto map = make_map("2.1");
    CHECK_THROWS_AS(map->forward(Word::parse("12345", 5)), DomainError);
    CHECK_THROWS_AS(map->inverse(Word::parse("21345", 5)), DomainError);
  }

  TEST_CASE("rewriter contract") {
    const Pattern t = parse_pattern("12");
    const Pattern r = parse_pattern("21");
    CHECK(check_rewriter_contract(*reversal_rewriter(), t, r).passed);
    auto bad = check_rewriter_contract(*identity_rewriter(), t, r);
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.detail.empty());
    CHECK(check_rewriter_contract(*identity_rewriter(), t, t).passed);
  }

  TEST_CASE("staged swaps are not injective beyond the domain of k") {
    // Both inputs avoid 134-2 over [6] and share an image.
    auto map = make_map("3.3a");
    const Word a = Word::parse("153624", 6);
    const Word b = Word::parse("163524", 6);
    REQUIRE_FALSE(contains(a, map->source()));
    REQUIRE_FALSE(contains(b, map->source()));
    CHECK(map->forward(a).to_string() == "135624");
    CHECK(map->forward(b).to_string() == "135624");
  }
}
