#include "vincular/genfun.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "vincular/errors.hpp"

namespace vincular {
namespace {

// Headroom for quotients by denominators of valuation one.
constexpr int kPad = 4;

using Series = TruncSeries;

Series one(int P) { return Series::constant(1, P); }
Series xpow(int m, int P, const Rational& c = 1) { return Series::monomial(c, m, P); }

// 1 + c x^m.
Series one_plus(const Rational& c, int m, int P) { return one(P) + xpow(m, P, c); }

Integer binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational q(const Integer& z) { return Rational(z); }

void require_k(int k, int min_k, const std::string& what) {
  if (k < min_k) {
    throw DomainError(what + " needs k >= " + std::to_string(min_k) + ", got k=" +
                      std::to_string(k));
  }
}

void require_order(int order) {
  if (order < 0) throw ValidationError("order must be non-negative");
}

Series finish(const Series& s, int order, const std::string& context) {
  Series out = s.truncated(order);
  require_counting_series(out, context);
  return out;
}

// W(k) = 1 + sum_{j=0}^{k-1} sum_{i=j}^{i_hi(k)} a(k,i,j) W(k-j), with the
// j = 0 band moved to the left and divided out. Returns W(0..k_max).
using ArrayCoef = std::function<Series(int k, int i, int j)>;

std::vector<Series> solve_upward(int k_max, int P, const ArrayCoef& a,
                                 const std::function<int(int)>& i_hi) {
  std::vector<Series> W{one(P)};
  for (int k = 1; k <= k_max; ++k) {
    Series rhs = one(P);
    Series band0(P);
    for (int j = 0; j < k; ++j) {
      for (int i = j; i <= i_hi(k); ++i) {
        Series t = a(k, i, j);
        if (j == 0) {
          band0 += t;
        } else {
          rhs += t * W[static_cast<std::size_t>(k - j)];
        }
      }
    }
    W.push_back(rhs * (one(P) - band0).reciprocal());
  }
  return W;
}

int below_k(int k) { return k - 1; }

// Arrays given by a polynomial-in-y recurrence, cached per call.
std::vector<SeriesPoly> arrays_upto(int i_max, int P,
                                    const std::function<SeriesPoly(int, const SeriesPoly&,
                                                                   const SeriesPoly&)>& step) {
  std::vector<SeriesPoly> A{SeriesPoly::constant(xpow(1, P)), SeriesPoly::constant(xpow(1, P))};
  for (int i = 1; static_cast<int>(A.size()) <= i_max; ++i) {
    A.push_back(step(i, A[static_cast<std::size_t>(i)], A[static_cast<std::size_t>(i - 1)]));
  }
  A.resize(static_cast<std::size_t>(std::max(i_max, 0)) + 1, SeriesPoly(P));
  return A;
}

SeriesPoly step_113_2(int, const SeriesPoly& a1, const SeriesPoly& a0) {
  const int P = a1.order();
  const SeriesPoly y = SeriesPoly::y(P);
  const SeriesPoly u = SeriesPoly::constant(one(P)) + y;
  // D = x^2 (1 - y) + y
  const SeriesPoly D = SeriesPoly({xpow(2, P), one(P) - xpow(2, P)}, P);
  return u * a1 - D * a0;
}

SeriesPoly step_132_3(int i, const SeriesPoly& a1, const SeriesPoly& a0) {
  const int P = a1.order();
  return a1 * one_plus(-i, 2, P) + SeriesPoly::y(P) * a0 * xpow(2, P, i);
}

std::vector<Series> arrays_to_w(int k, int P, const std::vector<SeriesPoly>& A) {
  return solve_upward(
      k, P, [&](int, int i, int j) { return A[static_cast<std::size_t>(i)].coefficient(j); },
      below_k);
}

Series coef_112_1(int i, int j, int P) {
  return xpow(2 * j + 1, P) * one_plus(-1, 2, P).pow(static_cast<unsigned>(i - j)) *
         q(binom(i, j));
}

Series coef_121_2(int i, int j, int P) {
  Series d = one(P);
  for (int l = i - j; l <= i; ++l) d *= one_plus(l, 2, P);
  return xpow(2 * j + 1, P, q(binom(i, j) * factorial(j))) * d.reciprocal();
}

Series coef_132_1(int i, int j, int P) {
  std::vector<Series> vals;
  Series prod = one(P);
  for (int s = 0; s < i; ++s) {
    vals.push_back(Series::constant(s, P) * one_plus(-s, 2, P).reciprocal());
    prod *= one_plus(-s, 2, P);
  }
  return elem_sym<Series>(static_cast<std::size_t>(j), vals, one(P)) * xpow(2 * j + 1, P) * prod;
}

std::vector<Series> w_list_112_1(int k, int P) {
  return solve_upward(k, P, [&](int, int i, int j) { return coef_112_1(i, j, P); }, below_k);
}
std::vector<Series> w_list_121_2(int k, int P) {
  return solve_upward(k, P, [&](int, int i, int j) { return coef_121_2(i, j, P); }, below_k);
}
std::vector<Series> w_list_132_1(int k, int P) {
  return solve_upward(k, P, [&](int, int i, int j) { return coef_132_1(i, j, P); }, below_k);
}
std::vector<Series> w_list_113_2(int k, int P) {
  return arrays_to_w(k, P, arrays_upto(k - 1, P, step_113_2));
}
std::vector<Series> w_list_132_3(int k, int P) {
  const auto A = arrays_upto(k - 1, P, step_132_3);
  for (int i = 0; i < k; ++i) {
    if (!(A[static_cast<std::size_t>(i)] == array_132_3_symmetric(i, P))) {
      throw FormulaError("132-3 arrays disagree at i=" + std::to_string(i));
    }
  }
  return arrays_to_w(k, P, A);
}

// F_m(k,q) = x^{2m+1} sum_{w=q}^{k-1-m} h_m(q..w) prod_{v=q}^{w-1} (1 - v x^2).
Series f_231_3(int k, int qq, int m, int P) {
  Series total(P);
  Series prod = one(P);
  for (int w = qq; w <= k - 1 - m; ++w) {
    if (w > qq) prod *= one_plus(-(w - 1), 2, P);
    std::vector<Rational> vals;
    for (int v = qq; v <= w; ++v) vals.emplace_back(v);
    total += prod * complete_sym<Rational>(static_cast<std::size_t>(m), vals, Rational(1));
  }
  return total * xpow(2 * m + 1, P);
}

std::vector<Series> w_list_231_3(int k, int P) {
  std::vector<Series> W{one(P)};
  for (int kk = 1; kk <= k; ++kk) {
    Series rhs = one(P);
    for (int m = 1; m < kk; ++m) rhs += f_231_3(kk, 0, m, P) * W[static_cast<std::size_t>(kk - m)];
    W.push_back(rhs * (one(P) - f_231_3(kk, 0, 0, P)).reciprocal());
  }
  return W;
}

// Closed subword series used by the product formula displays.
Series inner_112(int j, int P) {
  // x / ((1-x^2)^j - 1 + x)
  Series d = one_plus(-1, 2, P).pow(static_cast<unsigned>(j)) - one(P) + xpow(1, P);
  return xpow(1, P).quotient(d);
}

Series inner_212(int j, int P) {
  Series s(P);
  for (int i = 0; i < j; ++i) s += one_plus(i, 2, P).reciprocal();
  return (one(P) - xpow(1, P) * s).reciprocal();
}

Series inner_212_as_printed(int j, int P) {
  Series s(P);
  for (int i = 0; i <= j; ++i) s += one_plus(-i, 2, P).reciprocal();
  return (one(P) - xpow(1, P) - xpow(1, P) * s).reciprocal();
}

Series inner_123(int j, int P) {
  auto floor_sign = [](int e) { return (e / 3) % 2 == 0 ? 1 : -1; };
  Series d = one(P) - xpow(1, P, j);
  for (int i = 3; i <= j; ++i) {
    const int c = floor_sign(i - 3) + floor_sign(i - 2);
    if (c == 0) continue;
    Rational coef = Rational(c, 2) * q(binom(j, i)) * (i % 2 == 0 ? 1 : -1);
    d -= xpow(i, P, coef);
  }
  return d.reciprocal();
}

Series inner_213(int j, int P) {
  Series s(P);
  Series prod = one(P);
  for (int i = 0; i <= j - 2; ++i) {
    prod *= one_plus(-i, 2, P);
    s += prod;
  }
  return (one(P) - xpow(1, P) - xpow(1, P) * s).reciprocal();
}

Series product_form(int r_minus_1, int j_from, int k, int P,
                    const std::function<Series(int)>& inner) {
  Series d = one(P) - xpow(1, P, r_minus_1);
  for (int j = j_from; j <= k - 1; ++j) d *= one(P) - xpow(1, P) * inner(j);
  return d.reciprocal();
}

}  // namespace

void require_counting_series(const TruncSeries& s, const std::string& context) {
  for (int n = 0; n <= s.order(); ++n) {
    const Rational& c = s.coefficient(n);
    if (c.get_den() != 1 || c < 0) {
      throw FormulaError(context + ": coefficient of x^" + std::to_string(n) + " is " +
                         c.get_str() + ", not a count");
    }
  }
}

std::string to_json(const GFResult& r) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : r.series.coefficients()) coeffs.push_back(c.get_str());
  nlohmann::json j = {{"pattern", format_pattern(r.pattern)},
                      {"k", r.k},
                      {"theorem", r.theorem},
                      {"coeffs", std::move(coeffs)}};
  return j.dump();
}

TruncSeries subword_gf(const Pattern& tau, int k, int order) {
  require_order(order);
  if (!tau.is_subword()) throw ValidationError("subword_gf needs a pattern without dashes");
  if (k < 0) throw ValidationError("k must be non-negative");
  const int m = static_cast<int>(tau.size());
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  Integer power = 1;
  for (int n = 0; n <= std::min(order, m - 1); ++n) {
    c[static_cast<std::size_t>(n)] = power;
    power *= k;
  }
  if (order >= m && k > 0) {
    // States: the last m-1 letters, encoded base k.
    const auto states = static_cast<std::size_t>(mpz_class(power / k).get_ui());
    std::vector<Integer> cur(states, 1), next(states);
    std::vector<Letter> window(static_cast<std::size_t>(m));
    const auto target = tau.letters();
    auto decode = [&](std::size_t s) {
      for (int i = m - 2; i >= 0; --i) {
        window[static_cast<std::size_t>(i)] = static_cast<Letter>(s % static_cast<std::size_t>(k)) + 1;
        s /= static_cast<std::size_t>(k);
      }
    };
    std::vector<std::vector<std::size_t>> moves(states);
    for (std::size_t s = 0; s < states; ++s) {
      decode(s);
      for (Letter v = 1; v <= k; ++v) {
        window.back() = v;
        Word red = reduce(Word(window, k));
        if (std::equal(red.letters().begin(), red.letters().end(), target.begin(), target.end())) {
          continue;
        }
        moves[s].push_back((s * static_cast<std::size_t>(k)) % states + static_cast<std::size_t>(v - 1));
      }
    }
    for (int n = m; n <= order; ++n) {
      std::fill(next.begin(), next.end(), 0);
      Integer total = 0;
      for (std::size_t s = 0; s < states; ++s) {
        if (cur[s] == 0) continue;
        for (std::size_t t : moves[s]) next[t] += cur[s];
      }
      for (const auto& v : next) total += v;
      c[static_cast<std::size_t>(n)] = total;
      std::swap(cur, next);
    }
  } else if (k == 0) {
    std::fill(c.begin() + 1, c.end(), Rational(0));
  }
  return TruncSeries(std::move(c), order);
}

GFResult product_gf(const Pattern& tau, int k, int order) {
  require_order(order);
  if (!tau.is_subword()) throw ValidationError("product formula needs a subword pattern");
  const int r1 = tau.largest();
  require_k(k, r1, "product formula for " + format_pattern(tau));
  const int P = order + kPad;
  std::vector<Letter> letters(tau.letters().begin(), tau.letters().end());
  Pattern target = Pattern::from_blocks({letters, {r1 + 1}});
  Series s = product_form(r1, r1, k, P, [&](int j) { return subword_gf(tau, j, P); });
  return {target, k, finish(s, order, format_pattern(target)), "4.1"};
}

GFResult closed_form_gf(std::string_view pattern, int k, int order) {
  require_order(order);
  const int P = order + kPad;
  const Pattern p = parse_pattern(pattern);
  const std::string name = format_pattern(p);
  Series s;
  if (name == "111-2") {
    require_k(k, 1, name);
    s = product_form(1, 0, k - 1, P, [&](int j) {
      return (one(P) + xpow(1, P) + xpow(2, P)) * (one(P) - xpow(1, P, j) - xpow(2, P, j)).reciprocal();
    });
  } else if (name == "112-3") {
    require_k(k, 2, name);
    s = product_form(2, 2, k, P, [&](int j) { return inner_112(j, P); });
  } else if (name == "212-3") {
    require_k(k, 2, name);
    s = product_form(2, 2, k, P, [&](int j) { return inner_212(j, P); });
  } else if (name == "123-4") {
    require_k(k, 3, name);
    s = product_form(3, 3, k, P, [&](int j) { return inner_123(j, P); });
  } else if (name == "213-4") {
    require_k(k, 3, name);
    s = product_form(3, 3, k, P, [&](int j) { return inner_213(j, P); });
  } else {
    throw ValidationError("no closed form for " + name +
                          "; expected one of 111-2, 112-3, 212-3, 123-4, 213-4");
  }
  return {p, k, finish(s, order, name), "ex4.1"};
}

TruncSeries closed_form_212_3_as_printed(int k, int order) {
  require_order(order);
  require_k(k, 2, "212-3");
  const int P = order + kPad;
  return product_form(2, 2, k, P, [&](int j) { return inner_212_as_printed(j, P); })
      .truncated(order);
}

TruncSeries w_111_1_closed(int k, int order) {
  require_order(order);
  require_k(k, 1, "111-1");
  const int P = order + kPad;
  const Series xx = xpow(1, P) + xpow(2, P);  // x(1+x)
  Series total(P);
  for (int j = 1; j <= k; ++j) {
    Series num = one(P) + xx;
    if (j == 1) num += xpow(3, P);
    num = num * xpow(3 * (k - j), P, q(factorial(k - j) * binom(k, j)));
    Series den = one(P);
    for (int i = j; i <= k; ++i) den *= one(P) - xx * Rational(i - 1);
    total += num * den.reciprocal();
  }
  return finish(total, order, "111-1");
}

TruncSeries w_111_1_recurrence(int k, int order) {
  require_order(order);
  if (k < 0) throw DomainError("111-1 needs k >= 0");
  const int P = order + kPad;
  const Series xx = xpow(1, P) + xpow(2, P);
  Series W = one(P);
  for (int kk = 1; kk <= k; ++kk) {
    const Series inv = (one(P) - xx * Rational(kk - 1)).reciprocal();
    W = (one(P) + xx) * inv + xpow(3, P, kk) * inv * W;
  }
  return finish(W, order, "111-1");
}

TruncSeries w_111_1(int k, int order) {
  Series closed = w_111_1_closed(k, order);
  if (!(closed == w_111_1_recurrence(k, order))) {
    throw FormulaError("111-1 closed sum and recurrence disagree at k=" + std::to_string(k));
  }
  return closed;
}

TruncSeries w_112_1(int k, int order) {
  require_order(order);
  require_k(k, 0, "112-1");
  return finish(w_list_112_1(k, order + kPad).back(), order, "112-1");
}

TruncSeries w_112_2(int k, int order) {
  require_order(order);
  require_k(k, 1, "112-2");
  const int P = order + kPad;
  auto d = [&](int i) {
    return one_plus(-1, 2, P).pow(static_cast<unsigned>(i)) - one(P) + xpow(1, P);
  };
  Series total(P);
  for (int j = 1; j <= k; ++j) {
    Series t = xpow(1, P).quotient(d(j));
    for (int i = j + 1; i <= k; ++i) {
      Series num = xpow(2, P, i) - one(P) + one_plus(-1, 2, P).pow(static_cast<unsigned>(i));
      t *= num.quotient(d(i));
    }
    total += t;
  }
  return finish(total, order, "112-2");
}

TruncSeries w_113_2(int k, int order) {
  require_order(order);
  require_k(k, 0, "113-2");
  return finish(w_list_113_2(k, order + kPad).back(), order, "113-2");
}

TruncSeries w_121_1(int k, int order) {
  require_order(order);
  require_k(k, 1, "121-1");
  const int P = order + kPad;
  auto denom = [&](int j) {
    Series s(P);
    for (int l = 0; l < j; ++l) s += xpow(1, P) * one_plus(l, 2, P).reciprocal();
    return one(P) - s;
  };
  Series total(P);
  for (int j = 1; j <= k; ++j) {
    Series t = denom(j).reciprocal();
    for (int i = j + 1; i <= k; ++i) {
      Series num(P);
      for (int l = 0; l < i; ++l) num += xpow(3, P, l) * one_plus(l, 2, P).reciprocal();
      t *= num * denom(i).reciprocal();
    }
    total += t;
  }
  return finish(total, order, "121-1");
}

TruncSeries w_121_2(int k, int order) {
  require_order(order);
  require_k(k, 0, "121-2");
  return finish(w_list_121_2(k, order + kPad).back(), order, "121-2");
}

TruncSeries w_132_3(int k, int order) {
  require_order(order);
  require_k(k, 0, "132-3");
  return finish(w_list_132_3(k, order + kPad).back(), order, "132-3");
}

TruncSeries w_132_1(int k, int order) {
  require_order(order);
  require_k(k, 0, "132-1");
  return finish(w_list_132_1(k, order + kPad).back(), order, "132-1");
}

TruncSeries w_231_3(int k, int order) {
  require_order(order);
  require_k(k, 3, "231-3");
  return finish(w_list_231_3(k, order + kPad).back(), order, "231-3");
}

TruncSeries w_231_3_as_printed(int k, int order) {
  require_order(order);
  require_k(k, 3, "231-3");
  const int P = order + kPad;
  auto term = [&](int v) { return Series::constant(v, P) * one_plus(-v, 2, P).reciprocal(); };
  auto coef = [&](int kk, int i, int m) {
    // First summand over values k-1 .. k-i.
    std::vector<Series> vals;
    Series prod = one(P);
    for (int s = 1; s <= i; ++s) {
      vals.push_back(term(kk - s));
      prod *= one_plus(-(kk - s), 2, P);
    }
    Series total(P);
    if (kk - i - 1 != 0) {
      if (kk == 1) {
        throw FormulaError("231-3 array: non-removable zero denominator (k-1) at k=" +
                           std::to_string(kk) + ", i=" + std::to_string(i) +
                           ", j=" + std::to_string(m));
      }
      total = elem_sym<Series>(static_cast<std::size_t>(m), vals, one(P)) * prod *
              xpow(2 * m + 1, P, Rational(kk - i - 1, kk - 1));
    }
    for (int j = 1; j <= i; ++j) {
      std::vector<Series> inner;
      for (int v = kk - j - 1; v >= kk - i; --v) inner.push_back(term(v));
      Series p = one(P);
      for (int s = j + 1; s <= i; ++s) p *= one_plus(-(kk - s), 2, P);
      Series num = elem_sym<Series>(static_cast<std::size_t>(m), inner, one(P)) * p *
                   Rational(kk - i - 1);
      const int den = (kk - j - 1) * (kk - j);
      if (den == 0) {
        if (!num.is_zero()) {
          throw FormulaError("231-3 array: non-removable zero denominator at k=" +
                             std::to_string(kk) + ", i=" + std::to_string(i) +
                             ", j=" + std::to_string(j));
        }
        continue;
      }
      total += num * xpow(2 * m + 1, P, Rational(1, den));
    }
    return total;
  };
  auto W = solve_upward(k, P, coef, [](int kk) { return kk; });
  return finish(W.back(), order, "231-3");
}

SeriesPoly array_113_2(int i, int order) {
  require_order(order);
  if (i < 0) throw ValidationError("array index must be non-negative");
  return arrays_upto(i, order, step_113_2)[static_cast<std::size_t>(i)];
}

SeriesPoly array_113_2_chebyshev(int i, int order) {
  require_order(order);
  if (i < 0) throw ValidationError("array index must be non-negative");
  const int P = order;
  const SeriesPoly y = SeriesPoly::y(P);
  const SeriesPoly unit = SeriesPoly::constant(one(P));
  const SeriesPoly half_u = (unit + y) * Series::constant(Rational(1, 2), P);
  const SeriesPoly D = SeriesPoly({xpow(2, P), one(P) - xpow(2, P)}, P);
  // D^{i/2} P_i(u / (2 sqrt D)) = sum_c p_c (u/2)^c D^{(i-c)/2}; only c = i mod 2 occur.
  auto homogenize = [&](const IntPoly& poly) {
    SeriesPoly total(P);
    for (int c = 0; c <= i; ++c) {
      const Integer pc = poly.coefficient(c);
      if (pc == 0) continue;
      if ((i - c) % 2 != 0) throw FormulaError("Chebyshev polynomial has mixed parity");
      SeriesPoly term = SeriesPoly::constant(Series::constant(q(pc), P));
      for (int t = 0; t < c; ++t) term = term * half_u;
      for (int t = 0; t < (i - c) / 2; ++t) term = term * D;
      total += term;
    }
    return total;
  };
  const SeriesPoly B = homogenize(chebyshev_t(i));
  const SeriesPoly C = homogenize(chebyshev_u(i));
  const SeriesPoly bracket = y * B * Series::constant(2, P) + (unit - y) * C;
  return bracket.divide_by_one_plus_y() * xpow(1, P);
}

SeriesPoly array_132_3(int i, int order) {
  require_order(order);
  if (i < 0) throw ValidationError("array index must be non-negative");
  return arrays_upto(i, order, step_132_3)[static_cast<std::size_t>(i)];
}

namespace {

SeriesPoly array_132_3_sum(int i, int P, bool signed_sum) {
  if (i < 0) throw ValidationError("array index must be non-negative");
  std::vector<Series> coeffs;
  for (int j = 0; j <= i; ++j) {
    Series t(P);
    for (int d = 0; d <= i; ++d) {
      std::vector<Series> vals;
      for (int s = d - 1; s >= 0; --s) vals.push_back(xpow(2, P, s) - one(P));
      Rational c = q(binom(i, d));
      if (signed_sum && d % 2 == 1) c = -c;
      t += elem_sym<Series>(static_cast<std::size_t>(i - j), vals, one(P)) * c;
    }
    coeffs.push_back(t * xpow(1, P));
  }
  return SeriesPoly(std::move(coeffs), P);
}

}  // namespace

SeriesPoly array_132_3_symmetric(int i, int order) {
  require_order(order);
  return array_132_3_sum(i, order, true);
}

SeriesPoly array_132_3_as_printed(int i, int order) {
  require_order(order);
  return array_132_3_sum(i, order, false);
}

TruncSeries first_letter_gf(std::string_view pattern, int k, int a, int order) {
  require_order(order);
  const std::string name = format_pattern(parse_pattern(pattern));
  if (k < 1 || a < 1 || a > k) {
    throw DomainError("first letter " + std::to_string(a) + " outside [1, k] for k=" +
                      std::to_string(k));
  }
  const int P = order + kPad;
  const int i = k - a;
  // W(k|k-i) = sum_{j=0}^{i} a_{i,j} W(k-j).
  auto from_array = [&](const std::vector<Series>& W, const std::function<Series(int)>& aij) {
    Series g(P);
    for (int j = 0; j <= i; ++j) g += aij(j) * W[static_cast<std::size_t>(k - j)];
    return g;
  };
  Series g;
  if (name == "112-1") {
    g = from_array(w_list_112_1(k, P), [&](int j) { return coef_112_1(i, j, P); });
  } else if (name == "121-2") {
    g = from_array(w_list_121_2(k, P), [&](int j) { return coef_121_2(i, j, P); });
  } else if (name == "132-1") {
    g = from_array(w_list_132_1(k, P), [&](int j) { return coef_132_1(i, j, P); });
  } else if (name == "113-2") {
    const auto A = arrays_upto(k - 1, P, step_113_2);
    g = from_array(w_list_113_2(k, P),
                   [&](int j) { return A[static_cast<std::size_t>(i)].coefficient(j); });
  } else if (name == "132-3") {
    const auto A = arrays_upto(k - 1, P, step_132_3);
    g = from_array(w_list_132_3(k, P),
                   [&](int j) { return A[static_cast<std::size_t>(i)].coefficient(j); });
  } else if (name == "112-2") {
    require_k(k, 2, "112-2 first-letter series");
    const Series Wk = Series(w_112_2(k, P));
    const Series Wk1 = Series(w_112_2(k - 1, P));
    const Series inv = one_plus(-1, 2, P).pow(static_cast<unsigned>(a)).reciprocal();
    g = xpow(2, P) * inv + (xpow(1, P) - xpow(2, P)) * inv * Wk +
        xpow(1, P) * ((xpow(2, P, k) - one(P)) * inv + one(P)) * Wk1;
  } else if (name == "231-3") {
    const auto W = w_list_231_3(k, P);
    g = Series(P);
    for (int m = 0; m < k; ++m) {
      g += (f_231_3(k, k - a, m, P) - f_231_3(k, k - a + 1, m, P)) *
           W[static_cast<std::size_t>(k - m)];
    }
  } else {
    throw ValidationError("no first-letter decomposition for " + name);
  }
  return finish(g, order, name + " first letter " + std::to_string(a));
}

const std::vector<GFEntry>& gf_registry() {
  static const std::vector<GFEntry> entries = {
      {"4.1", "", 0, "product formula for tau-r from subword series (needs --subword)"},
      {"ex4.1", "", 1, "closed forms for 111-2, 112-3, 212-3, 123-4, 213-4 (needs --pattern)"},
      {"4.2", "111-1", 1, "closed sum, checked against the recurrence"},
      {"4.3", "112-1", 0, "binomial array, self-referential solve"},
      {"4.4", "112-2", 1, "sum of products over (1-x^2)^j - 1 + x"},
      {"4.5", "113-2", 0, "A_i(y) three-term recurrence"},
      {"4.6", "121-1", 1, "sum of products over 1 - sum x/(1+lx^2)"},
      {"4.7", "121-2", 0, "factorial array, self-referential solve"},
      {"4.8", "132-3", 0, "A_i(y) recurrence, checked against the signed symmetric sum"},
      {"4.9", "132-1", 0, "elementary symmetric array"},
      {"4.10", "231-3", 3, "first-letter system"},
  };
  return entries;
}

GFResult evaluate_gf(std::string_view tag, int k, int order, std::string_view pattern) {
  const std::string t(tag);
  if (t == "4.1") {
    if (pattern.empty()) throw ValidationError("tag 4.1 needs a subword pattern");
    const Pattern tau = parse_pattern(pattern);
    if (!tau.is_subword()) throw ValidationError("tag 4.1 needs a subword pattern (no dashes)");
    return product_gf(tau, k, order);
  }
  if (t == "ex4.1") {
    if (pattern.empty()) throw ValidationError("tag ex4.1 needs a pattern");
    return closed_form_gf(pattern, k, order);
  }
  const auto& entries = gf_registry();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const GFEntry& e) { return e.tag == t; });
  if (it == entries.end()) throw ValidationError("unknown generating-function tag '" + t + "'");
  const Pattern p = parse_pattern(it->pattern);
  if (!pattern.empty() && !(parse_pattern(pattern) == p)) {
    throw ValidationError("tag " + t + " is for pattern " + it->pattern);
  }
  require_k(k, it->min_k, it->pattern);
  static const std::map<std::string, std::function<TruncSeries(int, int)>> eval = {
      {"4.2", w_111_1},  {"4.3", w_112_1}, {"4.4", w_112_2}, {"4.5", w_113_2},
      {"4.6", w_121_1},  {"4.7", w_121_2}, {"4.8", w_132_3}, {"4.9", w_132_1},
      {"4.10", w_231_3},
  };
  return {p, k, eval.at(t)(k, order), t};
}

std::string GFVerification::summary() const {
  std::ostringstream os;
  if (passed) {
    os << "pass: " << compared << " coefficients match";
  } else {
    os << "mismatch at n=" << first_bad << ": series gives " << got.get_str()
       << ", enumeration gives " << expected;
  }
  return os.str();
}

GFVerification verify_gf(const GFResult& r, int n_max, const Guardrail& g) {
  if (n_max > r.series.order()) {
    throw DomainError("n_max " + std::to_string(n_max) + " exceeds the series order " +
                      std::to_string(r.series.order()));
  }
  GFVerification v;
  const auto counts = avoider_counts_upto(n_max, r.k, r.pattern, g);
  for (int n = 0; n <= n_max; ++n) {
    ++v.compared;
    const Rational& c = r.series.coefficient(n);
    if (c != Rational(Integer(std::to_string(counts[static_cast<std::size_t>(n)])))) {
      v.passed = false;
      v.first_bad = n;
      v.expected = counts[static_cast<std::size_t>(n)];
      v.got = c;
      break;
    }
  }
  return v;
}

}  // namespace vincular
