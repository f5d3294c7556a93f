#pragma once

// Truncated power series over exact rationals, polynomials in an auxiliary
// variable y with series coefficients, integer polynomials for the Chebyshev
// families, and symmetric functions.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vincular {

using Rational = mpq_class;
using Integer = mpz_class;

/// c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
///
/// Binary operations return the smaller of the two orders. Coefficients past
/// the order are unknown, never silently zero.
class TruncSeries {
 public:
  /// Zero series known through x^order.
  explicit TruncSeries(int order = 0);
  TruncSeries(std::vector<Rational> coefficients, int order);

  static TruncSeries constant(const Rational& c, int order);
  /// c * x^power.
  static TruncSeries monomial(const Rational& c, int power, int order);

  int order() const noexcept { return order_; }
  const Rational& coefficient(int n) const;
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  /// Index of the first nonzero coefficient; order() + 1 for the zero series.
  int valuation() const;
  bool is_zero() const { return valuation() > order_; }

  /// Drops coefficients past `order` (which must not exceed the current one).
  TruncSeries truncated(int order) const;

  TruncSeries operator-() const;
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  /// Throws DomainError when the constant term is zero.
  TruncSeries reciprocal() const;

  /// x^m * s, keeping the order.
  TruncSeries shift(int m) const;

  /// s / x^m; the first m coefficients must vanish. The order drops by m.
  TruncSeries unshift(int m) const;

  /// s / t. When t has valuation v > 0 the common factor x^v is cancelled
  /// first, so the order drops by v. Throws DomainError if s is not divisible.
  TruncSeries quotient(const TruncSeries& t) const;

  /// Raises to a non-negative integer power.
  TruncSeries pow(unsigned e) const;

  /// "1 + 2*x - 1/3*x^2 + O(x^6)".
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
  int order_;
};

/// A_0 + A_1 y + ... + A_d y^d with series coefficients of one common order.
class SeriesPoly {
 public:
  explicit SeriesPoly(int order = 0) : order_(order) {}
  SeriesPoly(std::vector<TruncSeries> coefficients, int order);

  static SeriesPoly constant(const TruncSeries& s);
  /// y as a polynomial.
  static SeriesPoly y(int order);

  int order() const noexcept { return order_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(a_.size()) - 1; }
  /// Coefficient of y^j; the zero series for j past the degree.
  TruncSeries coefficient(int j) const;

  SeriesPoly& operator+=(const SeriesPoly& o);
  SeriesPoly& operator-=(const SeriesPoly& o);
  SeriesPoly& operator*=(const TruncSeries& s);

  friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
  friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) { return a -= b; }
  friend SeriesPoly operator*(SeriesPoly a, const TruncSeries& s) { return a *= s; }
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
  friend bool operator==(const SeriesPoly& a, const SeriesPoly& b) {
    return a.order_ == b.order_ && a.a_ == b.a_;
  }

  /// Exact quotient by (1 + y); throws FormulaError on a nonzero remainder.
  SeriesPoly divide_by_one_plus_y() const;

 private:
  void trim();

  std::vector<TruncSeries> a_;
  int order_;
};

/// Dense polynomial in t with integer coefficients, lowest degree first.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coefficients);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Integer coefficient(int i) const;
  const std::vector<Integer>& coefficients() const noexcept { return c_; }
  Integer operator()(const Integer& t) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// T_0 = 1, T_1 = t, T_i = 2t T_{i-1} - T_{i-2}.
IntPoly chebyshev_t(int i);
/// U_0 = 1, U_1 = 2t, U_i = 2t U_{i-1} - U_{i-2}.
IntPoly chebyshev_u(int i);

/// e_m(values): 1 when m = 0, 0 when m exceeds the number of values.
template <class T>
T elem_sym(std::size_t m, std::span<const T> values, const T& one) {
  if (m > values.size()) return T(one - one);
  std::vector<T> e(m + 1, T(one - one));
  e[0] = one;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = std::min(m, i + 1); j >= 1; --j) e[j] = e[j] + e[j - 1] * values[i];
  }
  return e[m];
}

/// h_m(values): sum of all degree-m monomials; 1 when m = 0.
template <class T>
T complete_sym(std::size_t m, std::span<const T> values, const T& one) {
  std::vector<T> h(m + 1, T(one - one));
  h[0] = one;
  for (const T& v : values) {
    for (std::size_t j = 1; j <= m; ++j) h[j] = h[j] + h[j - 1] * v;
  }
  return h[m];
}

std::string to_string(const Rational& q);

}  // namespace vincular
