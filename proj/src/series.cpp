#include "vincular/series.hpp"

#include <algorithm>
#include <sstream>

#include "vincular/errors.hpp"

namespace vincular {
namespace {

void require_order(int order) {
  if (order < 0) throw ValidationError("series order must be non-negative");
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

TruncSeries::TruncSeries(int order) : order_(order) {
  require_order(order);
  c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncSeries::TruncSeries(std::vector<Rational> coefficients, int order)
    : c_(std::move(coefficients)), order_(order) {
  require_order(order);
  c_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
  for (auto& q : c_) q.canonicalize();
}

TruncSeries TruncSeries::constant(const Rational& c, int order) {
  TruncSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncSeries TruncSeries::monomial(const Rational& c, int power, int order) {
  if (power < 0) throw ValidationError("monomial power must be non-negative");
  TruncSeries s(order);
  if (power <= order) s.c_[static_cast<std::size_t>(power)] = c;
  return s;
}

const Rational& TruncSeries::coefficient(int n) const {
  if (n < 0 || n > order_) {
    throw DomainError("coefficient " + std::to_string(n) + " is beyond the truncation order " +
                      std::to_string(order_));
  }
  return c_[static_cast<std::size_t>(n)];
}

int TruncSeries::valuation() const {
  for (int i = 0; i <= order_; ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return i;
  }
  return order_ + 1;
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > order_) {
    throw DomainError("cannot extend a series of order " + std::to_string(order_) + " to " +
                      std::to_string(order));
  }
  return TruncSeries({c_.begin(), c_.begin() + order + 1}, order);
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  for (auto& q : s.c_) q = -q;
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) c_[static_cast<std::size_t>(i)] += o.c_[static_cast<std::size_t>(i)];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i <= order_; ++i) c_[static_cast<std::size_t>(i)] -= o.c_[static_cast<std::size_t>(i)];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int order = std::min(a.order_, b.order_);
  TruncSeries s(order);
  const int va = a.valuation();
  const int vb = b.valuation();
  Rational t;
  for (int i = va; i <= order; ++i) {
    const Rational& ai = a.c_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = vb; i + j <= order; ++j) {
      t = ai * b.c_[static_cast<std::size_t>(j)];
      s.c_[static_cast<std::size_t>(i + j)] += t;
    }
  }
  return s;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& o) { return *this = *this * o; }

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& q : c_) q *= c;
  return *this;
}

TruncSeries TruncSeries::reciprocal() const {
  if (c_[0] == 0) throw DomainError("reciprocal of a series with zero constant term");
  TruncSeries r(order_);
  const Rational inv = 1 / c_[0];
  r.c_[0] = inv;
  for (int n = 1; n <= order_; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) {
      acc += c_[static_cast<std::size_t>(i)] * r.c_[static_cast<std::size_t>(n - i)];
    }
    r.c_[static_cast<std::size_t>(n)] = -acc * inv;
  }
  return r;
}

TruncSeries TruncSeries::shift(int m) const {
  if (m < 0) return unshift(-m);
  TruncSeries s(order_);
  for (int i = 0; i + m <= order_; ++i) s.c_[static_cast<std::size_t>(i + m)] = c_[static_cast<std::size_t>(i)];
  return s;
}

TruncSeries TruncSeries::unshift(int m) const {
  if (m < 0) return shift(-m);
  if (m > order_) throw DomainError("cannot divide a series of order " + std::to_string(order_) +
                                    " by x^" + std::to_string(m));
  if (valuation() < m) {
    throw DomainError("series is not divisible by x^" + std::to_string(m));
  }
  return TruncSeries({c_.begin() + m, c_.end()}, order_ - m);
}

TruncSeries TruncSeries::quotient(const TruncSeries& t) const {
  const int v = t.valuation();
  if (v > t.order_) throw DomainError("division by the zero series");
  return unshift(v) * t.unshift(v).reciprocal();
}

TruncSeries TruncSeries::pow(unsigned e) const {
  TruncSeries result = constant(1, order_);
  TruncSeries base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= order_; ++i) {
    const Rational& q = c_[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << " + O(x^" << order_ + 1 << ")";
  return os.str();
}

SeriesPoly::SeriesPoly(std::vector<TruncSeries> coefficients, int order)
    : a_(std::move(coefficients)), order_(order) {
  for (auto& s : a_) s = s.truncated(order_);
  trim();
}

SeriesPoly SeriesPoly::constant(const TruncSeries& s) { return SeriesPoly({s}, s.order()); }

SeriesPoly SeriesPoly::y(int order) {
  return SeriesPoly({TruncSeries(order), TruncSeries::constant(1, order)}, order);
}

TruncSeries SeriesPoly::coefficient(int j) const {
  if (j < 0 || j > degree()) return TruncSeries(order_);
  return a_[static_cast<std::size_t>(j)];
}

void SeriesPoly::trim() {
  while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& o) {
  const int order = std::min(order_, o.order_);
  const auto n = std::max(a_.size(), o.a_.size());
  std::vector<TruncSeries> out;
  for (std::size_t j = 0; j < n; ++j) {
    out.push_back(coefficient(static_cast<int>(j)).truncated(order) +
                  o.coefficient(static_cast<int>(j)));
  }
  return *this = SeriesPoly(std::move(out), order);
}

SeriesPoly& SeriesPoly::operator-=(const SeriesPoly& o) {
  const int order = std::min(order_, o.order_);
  const auto n = std::max(a_.size(), o.a_.size());
  std::vector<TruncSeries> out;
  for (std::size_t j = 0; j < n; ++j) {
    out.push_back(coefficient(static_cast<int>(j)).truncated(order) -
                  o.coefficient(static_cast<int>(j)));
  }
  return *this = SeriesPoly(std::move(out), order);
}

SeriesPoly& SeriesPoly::operator*=(const TruncSeries& s) {
  const int order = std::min(order_, s.order());
  std::vector<TruncSeries> out;
  for (const auto& c : a_) out.push_back(c * s);
  return *this = SeriesPoly(std::move(out), order);
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  const int order = std::min(a.order_, b.order_);
  if (a.a_.empty() || b.a_.empty()) return SeriesPoly(order);
  std::vector<TruncSeries> out(a.a_.size() + b.a_.size() - 1, TruncSeries(order));
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    for (std::size_t j = 0; j < b.a_.size(); ++j) out[i + j] += a.a_[i] * b.a_[j];
  }
  return SeriesPoly(std::move(out), order);
}

SeriesPoly SeriesPoly::divide_by_one_plus_y() const {
  if (a_.empty()) return SeriesPoly(order_);
  // Synthetic division from the top coefficient down.
  const auto d = a_.size() - 1;
  std::vector<TruncSeries> q(d, TruncSeries(order_));
  TruncSeries carry(order_);
  for (std::size_t j = d; j >= 1; --j) {
    carry = a_[j] - carry;
    q[j - 1] = carry;
  }
  TruncSeries remainder = a_[0] - carry;
  if (!remainder.is_zero()) {
    throw FormulaError("division by (1 + y) leaves remainder " + remainder.to_string());
  }
  return SeriesPoly(std::move(q), order_);
}

IntPoly::IntPoly(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Integer IntPoly::operator()(const Integer& t) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& q = c_[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    Integer mag = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) os << (mag != 1 ? "*t" : "t");
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace {

IntPoly chebyshev(int i, IntPoly p1) {
  if (i < 0) throw ValidationError("Chebyshev index must be non-negative");
  IntPoly p0({1});
  if (i == 0) return p0;
  const IntPoly two_t({0, 2});
  for (int n = 2; n <= i; ++n) {
    IntPoly next = two_t * p1 - p0;
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

}  // namespace

IntPoly chebyshev_t(int i) { return chebyshev(i, IntPoly({0, 1})); }
IntPoly chebyshev_u(int i) { return chebyshev(i, IntPoly({0, 2})); }

}  // namespace vincular
