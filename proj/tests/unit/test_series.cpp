#include <doctest.h>

#include <random>

#include "vincular/enumeration.hpp"
#include "vincular/errors.hpp"
#include "vincular/series.hpp"

using namespace vincular;

namespace {

TruncSeries random_series(std::mt19937& rng, int order, bool unit) {
  std::vector<Rational> c;
  for (int i = 0; i <= order; ++i) {
    Rational q(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
    q.canonicalize();
    c.push_back(q);
  }
  if (unit && c[0] == 0) c[0] = 1;
  return TruncSeries(c, order);
}

// Polynomial in z with rational coefficients, lowest degree first.
using Poly = std::vector<Rational>;

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

TEST_SUITE("powerseries") {
  TEST_CASE("reciprocal of 1 - x is the geometric series") {
    auto s = (TruncSeries::constant(1, 10) - TruncSeries::monomial(1, 1, 10)).reciprocal();
    for (int n = 0; n <= 10; ++n) CHECK(s.coefficient(n) == 1);
    CHECK(s.order() == 10);
  }

  TEST_CASE("reciprocal of 1 - 2x counts words that avoid a three-letter pattern") {
    auto s = (TruncSeries::constant(1, 9) - TruncSeries::monomial(2, 1, 9)).reciprocal();
    const Pattern p = parse_pattern("12-3");
    for (int n = 0; n <= 9; ++n) {
      CHECK(s.coefficient(n) == Rational(static_cast<unsigned long>(count_avoiders(n, 2, p))));
    }
  }

  TEST_CASE("errors and truncation") {
    CHECK_THROWS_AS(TruncSeries::monomial(1, 1, 5).reciprocal(), DomainError);
    TruncSeries s = TruncSeries::constant(1, 4);
    CHECK_THROWS_AS(s.coefficient(5), DomainError);
    CHECK_THROWS_AS(s.coefficient(-1), DomainError);
    TruncSeries a = TruncSeries::constant(1, 6);
    TruncSeries b = TruncSeries::constant(2, 3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(TruncSeries::monomial(3, 2, 6).valuation() == 2);
    CHECK(TruncSeries(5).is_zero());
    CHECK(TruncSeries::monomial(1, 2, 6).unshift(2) == TruncSeries::constant(1, 4));
    CHECK_THROWS_AS(TruncSeries::monomial(1, 1, 6).unshift(2), DomainError);
    CHECK(TruncSeries::constant(1, 6).shift(2) == TruncSeries::monomial(1, 2, 6));
  }

  TEST_CASE("quotient cancels a common power of x") {
    // (x - x^2) / x = 1 - x, known through x^(N-1).
    auto num = TruncSeries::monomial(1, 1, 8) - TruncSeries::monomial(1, 2, 8);
    auto q = num.quotient(TruncSeries::monomial(1, 1, 8));
    CHECK(q.order() == 7);
    CHECK(q.coefficient(0) == 1);
    CHECK(q.coefficient(1) == -1);
    CHECK(q.coefficient(2) == 0);
    CHECK_THROWS_AS(TruncSeries::constant(1, 8).quotient(TruncSeries::monomial(1, 1, 8)),
                    DomainError);
  }

  TEST_CASE("ring laws on random series") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      const int order = static_cast<int>(rng() % 17);
      auto a = random_series(rng, order, false);
      auto b = random_series(rng, order, false);
      auto c = random_series(rng, order, false);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == TruncSeries(order));
      auto u = random_series(rng, order, true);
      CHECK(u * u.reciprocal() == TruncSeries::constant(1, order));
      CHECK(u.pow(3) == u * u * u);
      CHECK(u.pow(0) == TruncSeries::constant(1, order));
    }
  }

  TEST_CASE("printing") {
    TruncSeries s({Rational(1), Rational(2), Rational(-1, 3)}, 2);
    CHECK(s.to_string() == "1 + 2*x - 1/3*x^2 + O(x^3)");
    CHECK(TruncSeries(1).to_string() == "0 + O(x^2)");
    Rational q(-4, 6);
    q.canonicalize();
    CHECK(to_string(q) == "-2/3");
  }

  TEST_CASE("Chebyshev polynomials") {
    CHECK(chebyshev_t(0).to_string() == "1");
    CHECK(chebyshev_t(2).to_string() == "2*t^2 - 1");
    CHECK(chebyshev_u(2).to_string() == "4*t^2 - 1");
    CHECK(chebyshev_u(1).to_string() == "2*t");
    for (int i = 0; i <= 20; ++i) {
      CHECK(chebyshev_t(i).degree() == i);
      CHECK(chebyshev_t(i)(Integer(1)) == 1);
      CHECK(chebyshev_u(i)(Integer(1)) == i + 1);
    }
    const IntPoly t2m1({Integer(-1), Integer(0), Integer(1)});
    for (int i = 1; i <= 12; ++i) {
      const IntPoly lhs =
          chebyshev_t(i) * chebyshev_t(i) - t2m1 * chebyshev_u(i - 1) * chebyshev_u(i - 1);
      CHECK(lhs.to_string() == "1");
    }
  }

  TEST_CASE("elementary symmetric functions") {
    std::vector<Rational> v = {Rational(2), Rational(3), Rational(5)};
    std::span<const Rational> s(v);
    CHECK(elem_sym<Rational>(0, s, Rational(1)) == 1);
    CHECK(elem_sym<Rational>(0, std::span<const Rational>{}, Rational(1)) == 1);
    CHECK(elem_sym<Rational>(2, s, Rational(1)) == 2 * 3 + 2 * 5 + 3 * 5);
    CHECK(elem_sym<Rational>(3, s, Rational(1)) == 30);
    CHECK(elem_sym<Rational>(4, s, Rational(1)) == 0);
    CHECK(complete_sym<Rational>(2, s, Rational(1)) == 4 + 9 + 25 + 6 + 10 + 15);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Rational> vals;
      const std::size_t n = rng() % 6;
      for (std::size_t i = 0; i < n; ++i) vals.emplace_back(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
      for (auto& q : vals) q.canonicalize();
      Poly prod = {Rational(1)};
      for (const auto& x : vals) prod = mul(prod, Poly{Rational(1), x});
      for (std::size_t m = 0; m <= n + 1; ++m) {
        const Rational expected = m < prod.size() ? prod[m] : Rational(0);
        CHECK(elem_sym<Rational>(m, std::span<const Rational>(vals), Rational(1)) == expected);
      }
    }
  }

  TEST_CASE("elementary symmetric functions over series") {
    const int N = 6;
    std::vector<TruncSeries> v = {TruncSeries::monomial(1, 1, N), TruncSeries::constant(2, N)};
    auto e1 = elem_sym<TruncSeries>(1, std::span<const TruncSeries>(v), TruncSeries::constant(1, N));
    CHECK(e1 == TruncSeries::monomial(1, 1, N) + TruncSeries::constant(2, N));
    auto e2 = elem_sym<TruncSeries>(2, std::span<const TruncSeries>(v), TruncSeries::constant(1, N));
    CHECK(e2 == TruncSeries::monomial(2, 1, N));
  }

  TEST_CASE("series polynomials in y") {
    const int N = 6;
    const SeriesPoly y = SeriesPoly::y(N);
    const SeriesPoly one = SeriesPoly::constant(TruncSeries::constant(1, N));
    const SeriesPoly p = (one + y) * (one + y * y) * TruncSeries::monomial(1, 1, N);
    const SeriesPoly q = p.divide_by_one_plus_y();
    CHECK(q == (one + y * y) * TruncSeries::monomial(1, 1, N));
    CHECK(q.degree() == 2);
    CHECK_THROWS_AS((one + y * y).divide_by_one_plus_y(), FormulaError);
    CHECK((y - y).degree() == -1);
    CHECK(p.coefficient(7).is_zero());
  }
}
