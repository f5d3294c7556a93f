#pragma once

// Independent brute-force references. They share nothing with the library
// beyond the Pattern accessors: occurrences come from enumerating every
// increasing index tuple and counts from enumerating every word.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "vincular/pattern.hpp"

namespace oracle {

using vincular::Letter;
using vincular::Pattern;
using Tuple = std::vector<std::size_t>;

inline int sign(int v) { return (v > 0) - (v < 0); }

/// True when the letters of w at `idx` are order-isomorphic to p and the
/// adjacency set is respected.
inline bool is_occurrence(const std::vector<Letter>& w, const Pattern& p, const Tuple& idx) {
  const auto t = p.letters();
  for (std::size_t a = 0; a + 1 < idx.size(); ++a) {
    if (idx[a] >= idx[a + 1]) return false;
    if (p.adjacent(a + 1) && idx[a + 1] != idx[a] + 1) return false;
  }
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (sign(w[idx[a]] - w[idx[b]]) != sign(t[a] - t[b])) return false;
    }
  }
  return true;
}

/// Every occurrence, in lexicographic order of index tuples.
inline std::vector<Tuple> occurrences(const std::vector<Letter>& w, const Pattern& p) {
  std::vector<Tuple> out;
  const std::size_t m = p.size();
  if (w.size() < m) return out;
  Tuple idx(m);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == m) {
      if (is_occurrence(w, p, idx)) out.push_back(idx);
      return;
    }
    for (std::size_t i = from; i < w.size(); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

inline bool contains(const std::vector<Letter>& w, const Pattern& p) {
  return !occurrences(w, p).empty();
}

/// Calls f on every word of [k]^n.
inline void each_word(int n, int k, const std::function<void(const std::vector<Letter>&)>& f) {
  if (n == 0) {
    f({});
    return;
  }
  if (k == 0) return;
  std::vector<Letter> w(static_cast<std::size_t>(n), 1);
  while (true) {
    f(w);
    std::size_t i = w.size();
    while (i > 0 && w[i - 1] == k) w[--i] = 1;
    if (i == 0) return;
    ++w[i - 1];
  }
}

inline std::uint64_t count_avoiders(int n, int k, const Pattern& p) {
  std::uint64_t c = 0;
  each_word(n, k, [&](const std::vector<Letter>& w) { c += !contains(w, p); });
  return c;
}

inline std::vector<Letter> reduce(const std::vector<Letter>& w) {
  std::vector<Letter> out;
  for (Letter v : w) {
    Letter r = 1;
    std::vector<Letter> smaller;
    for (Letter u : w) {
      if (u < v && std::find(smaller.begin(), smaller.end(), u) == smaller.end()) smaller.push_back(u);
    }
    r += static_cast<Letter>(smaller.size());
    out.push_back(r);
  }
  return out;
}

inline std::vector<Letter> random_word(std::mt19937& rng, int n, int k) {
  std::uniform_int_distribution<Letter> d(1, k);
  std::vector<Letter> w(static_cast<std::size_t>(n));
  for (auto& v : w) v = d(rng);
  return w;
}

/// All (3,1) and (2,2) patterns.
inline std::vector<Pattern> census_universe() {
  std::vector<Pattern> u = vincular::all_patterns(std::vector<int>{3, 1});
  auto b = vincular::all_patterns(std::vector<int>{2, 2});
  u.insert(u.end(), b.begin(), b.end());
  return u;
}

}  // namespace oracle
