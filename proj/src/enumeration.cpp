#include "vincular/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "vincular/errors.hpp"
#include "vincular/matcher.hpp"

namespace vincular {
namespace {

void check_nk(int n, int k) {
  if (n < 0) throw ValidationError("n must be non-negative");
  if (k < 0) throw ValidationError("k must be non-negative");
}

// Extends avoiding prefixes one letter at a time. Only occurrences that end at
// the new letter need checking, since the prefix itself already avoids p.
class PrefixSearch {
 public:
  PrefixSearch(int n_max, int k, const Pattern& p) : n_max_(n_max), k_(k), p_(p) {
    word_.reserve(static_cast<std::size_t>(n_max));
  }

  // Calls visit(word) for every avoider of length <= n_max extending `prefix`.
  template <class Visit>
  void run(std::span<const Letter> prefix, Visit&& visit) {
    word_.assign(prefix.begin(), prefix.end());
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (contains_ending_at(std::span<const Letter>(word_.data(), i + 1), p_, i)) return;
    }
    dfs(visit);
  }

 private:
  template <class Visit>
  void dfs(Visit& visit) {
    visit(std::span<const Letter>(word_));
    if (static_cast<int>(word_.size()) == n_max_) return;
    const std::size_t last = word_.size();
    word_.push_back(0);
    for (Letter v = 1; v <= k_; ++v) {
      word_.back() = v;
      if (!contains_ending_at(word_, p_, last)) dfs(visit);
    }
    word_.pop_back();
  }

  int n_max_;
  int k_;
  const Pattern& p_;
  std::vector<Letter> word_;
};

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::vector<std::vector<std::size_t>> group_by(std::size_t n, auto&& key) {
  std::vector<std::vector<std::size_t>> groups;
  std::map<std::decay_t<decltype(key(0))>, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = slot.try_emplace(key(i), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

}  // namespace

Guardrail Guardrail::from_env() {
  Guardrail g;
  if (const char* env = std::getenv("VINCULAR_GUARDRAIL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) g.max_cell = v;
  }
  return g;
}

void Guardrail::check(int n, int k) const {
  check_nk(n, k);
  unsigned long long cell = 1;
  for (int i = 0; i < n; ++i) {
    if (k != 0 && cell > max_cell / static_cast<unsigned long long>(k)) {
      throw GuardrailError("cell (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                               ") exceeds the guardrail of " + std::to_string(max_cell) +
                               " words",
                           max_cell);
    }
    cell *= static_cast<unsigned long long>(k);
  }
  if (cell > max_cell) {
    throw GuardrailError("cell (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                             ") exceeds the guardrail of " + std::to_string(max_cell) + " words",
                         max_cell);
  }
}

std::vector<Count> avoider_counts_upto(int n_max, int k, const Pattern& p, const Guardrail& g) {
  g.check(n_max, k);
  std::vector<Count> counts(static_cast<std::size_t>(n_max) + 1, 0);
  PrefixSearch(n_max, k, p).run({}, [&](std::span<const Letter> w) { ++counts[w.size()]; });
  return counts;
}

Count count_avoiders(int n, int k, const Pattern& p, const Guardrail& g) {
  return avoider_counts_upto(n, k, p, g).back();
}

Count count_avoiders_prefix(int n, int k, const Pattern& p, const Word& prefix,
                            const Guardrail& g) {
  g.check(n, k);
  if (prefix.size() > static_cast<std::size_t>(n)) {
    throw ValidationError("prefix is longer than n");
  }
  for (Letter v : prefix.letters()) {
    if (v > k) throw ValidationError("prefix letter " + std::to_string(v) + " exceeds k");
  }
  Count count = 0;
  PrefixSearch(n, k, p).run(prefix.letters(), [&](std::span<const Letter> w) {
    if (static_cast<int>(w.size()) == n) ++count;
  });
  return count;
}

std::vector<std::vector<Count>> avoider_counts_by_first_letter(int n_max, int k,
                                                               const Pattern& p,
                                                               const Guardrail& g) {
  g.check(n_max, k);
  std::vector<std::vector<Count>> out(static_cast<std::size_t>(n_max) + 1,
                                      std::vector<Count>(static_cast<std::size_t>(k), 0));
  PrefixSearch(n_max, k, p).run({}, [&](std::span<const Letter> w) {
    if (!w.empty()) ++out[w.size()][static_cast<std::size_t>(w[0]) - 1];
  });
  return out;
}

std::map<std::vector<int>, Count> avoider_counts_by_content(int n, int k, const Pattern& p,
                                                            const Guardrail& g) {
  g.check(n, k);
  std::map<std::vector<int>, Count> out;
  std::vector<int> mult(static_cast<std::size_t>(k), 0);
  PrefixSearch(n, k, p).run({}, [&](std::span<const Letter> w) {
    if (static_cast<int>(w.size()) != n) return;
    std::fill(mult.begin(), mult.end(), 0);
    for (Letter v : w) ++mult[static_cast<std::size_t>(v) - 1];
    ++out[mult];
  });
  return out;
}

Count count_avoiders_by_content(int n, int k, const Pattern& p,
                                const std::vector<int>& multiplicity, const Guardrail& g) {
  g.check(n, k);
  if (multiplicity.size() > static_cast<std::size_t>(k)) {
    throw ValidationError("content uses letters beyond k");
  }
  std::vector<int> remaining(static_cast<std::size_t>(k), 0);
  std::copy(multiplicity.begin(), multiplicity.end(), remaining.begin());
  for (int m : remaining) {
    if (m < 0) throw ValidationError("content multiplicities must be non-negative");
  }
  if (std::accumulate(remaining.begin(), remaining.end(), 0) != n) {
    throw ValidationError("content size must equal n");
  }
  // Rearrangements only: a letter is offered while copies of it remain.
  Count count = 0;
  std::vector<Letter> word;
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == n) {
      ++count;
      return;
    }
    const std::size_t last = word.size();
    word.push_back(0);
    for (Letter v = 1; v <= k; ++v) {
      auto& left = remaining[static_cast<std::size_t>(v) - 1];
      if (left == 0) continue;
      word.back() = v;
      if (contains_ending_at(word, p, last)) continue;
      --left;
      self(self);
      ++left;
    }
    word.pop_back();
  };
  dfs(dfs);
  return count;
}

CountTable count_table(const Pattern& p, int n_max, int k_max, const Guardrail& g) {
  CountTable t{p, n_max, k_max, {}};
  for (int k = 1; k <= k_max; ++k) {
    auto counts = avoider_counts_upto(n_max, k, p, g);
    for (int n = 0; n <= n_max; ++n) t.entries[{n, k}] = counts[static_cast<std::size_t>(n)];
  }
  return t;
}

std::string to_jsonl(const CountTable& t) {
  std::string out;
  const std::string name = format_pattern(t.pattern);
  for (const auto& [nk, count] : t.entries) {
    nlohmann::json j = {{"pattern", name}, {"n", nk.first}, {"k", nk.second}, {"count", count}};
    out += j.dump() + "\n";
  }
  return out;
}

std::string EquivalenceReport::summary() const {
  std::ostringstream os;
  os << format_pattern(left) << " vs " << format_pattern(right) << ": ";
  if (passed()) {
    os << "agree on " << cells_compared << " cells";
  } else {
    const auto& m = mismatches.front();
    os << mismatches.size() << " of " << cells_compared << " cells differ, first at n=" << m.n
       << " k=" << m.k;
    if (!m.cell.empty()) os << " " << m.cell;
    os << " (" << m.left << " vs " << m.right << ")";
  }
  return os.str();
}

EquivalenceReport verify_equivalence(const Pattern& p, const Pattern& q, int n_max, int k_max,
                                     Refinement refinement, const Guardrail& g) {
  EquivalenceReport r{p, q, refinement, 0, {}};
  auto compare = [&](int n, int k, std::string cell, Count a, Count b) {
    ++r.cells_compared;
    if (a != b) r.mismatches.push_back({n, k, std::move(cell), a, b});
  };
  for (int k = 1; k <= k_max; ++k) {
    switch (refinement) {
      case Refinement::None: {
        auto a = avoider_counts_upto(n_max, k, p, g);
        auto b = avoider_counts_upto(n_max, k, q, g);
        for (int n = 0; n <= n_max; ++n) {
          compare(n, k, "", a[static_cast<std::size_t>(n)], b[static_cast<std::size_t>(n)]);
        }
        break;
      }
      case Refinement::FirstLetter: {
        auto a = avoider_counts_by_first_letter(n_max, k, p, g);
        auto b = avoider_counts_by_first_letter(n_max, k, q, g);
        for (int n = 1; n <= n_max; ++n) {
          for (int f = 1; f <= k; ++f) {
            auto i = static_cast<std::size_t>(f) - 1;
            compare(n, k, "first=" + std::to_string(f), a[static_cast<std::size_t>(n)][i],
                    b[static_cast<std::size_t>(n)][i]);
          }
        }
        break;
      }
      case Refinement::Content: {
        for (int n = 0; n <= n_max; ++n) {
          auto a = avoider_counts_by_content(n, k, p, g);
          auto b = avoider_counts_by_content(n, k, q, g);
          std::map<std::vector<int>, std::pair<Count, Count>> cells;
          for (const auto& [c, v] : a) cells[c].first = v;
          for (const auto& [c, v] : b) cells[c].second = v;
          for (const auto& [c, v] : cells) compare(n, k, "content=" + join(c), v.first, v.second);
        }
        break;
      }
    }
  }
  return r;
}

std::size_t WilfClassification::class_of(std::size_t i) const {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::find(classes[c].begin(), classes[c].end(), i) != classes[c].end()) return c;
  }
  throw ValidationError("pattern index outside the universe");
}

std::size_t WilfClassification::orbit_of(std::size_t i) const {
  for (std::size_t c = 0; c < symmetry_orbits.size(); ++c) {
    const auto& o = symmetry_orbits[c];
    if (std::find(o.begin(), o.end(), i) != o.end()) return c;
  }
  throw ValidationError("pattern index outside the universe");
}

std::optional<std::pair<int, int>> WilfClassification::witness(std::size_t i,
                                                               std::size_t j) const {
  const auto& a = signatures[i];
  const auto& b = signatures[j];
  const auto rows = static_cast<std::size_t>(n_max) + 1;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] != b[t]) return std::pair{static_cast<int>(t % rows), static_cast<int>(t / rows) + 1};
  }
  return std::nullopt;
}

WilfClassification wilf_classify(const std::vector<Pattern>& universe, int n_max, int k_max,
                                 const Guardrail& g) {
  for (int k = 1; k <= k_max; ++k) g.check(n_max, k);
  WilfClassification w{universe, n_max, k_max, {}, {}, {}};
  w.signatures.resize(universe.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < universe.size(); i = next++) {
      std::vector<Count> sig;
      for (int k = 1; k <= k_max; ++k) {
        auto counts = avoider_counts_upto(n_max, k, universe[i], g);
        sig.insert(sig.end(), counts.begin(), counts.end());
      }
      w.signatures[i] = std::move(sig);
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  w.classes = group_by(universe.size(), [&](std::size_t i) { return w.signatures[i]; });

  std::map<Pattern, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i) index.emplace(universe[i], i);
  DisjointSets sets(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const Pattern r = reverse(universe[i]);
    for (const Pattern& s : {r, complement(universe[i]), complement(r)}) {
      if (auto it = index.find(s); it != index.end()) sets.unite(i, it->second);
    }
  }
  w.symmetry_orbits = group_by(universe.size(), [&](std::size_t i) { return sets.find(i); });
  return w;
}

std::string to_json(const WilfClassification& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : c.classes) {
    nlohmann::json names = nlohmann::json::array();
    std::map<std::size_t, nlohmann::json> orbits;
    for (std::size_t i : cls) {
      names.push_back(format_pattern(c.universe[i]));
      orbits[c.orbit_of(i)].push_back(format_pattern(c.universe[i]));
    }
    nlohmann::json orbit_list = nlohmann::json::array();
    for (auto& [_, o] : orbits) orbit_list.push_back(std::move(o));
    classes.push_back({{"patterns", std::move(names)},
                       {"orbits", std::move(orbit_list)},
                       {"singleton", cls.size() == 1}});
  }
  nlohmann::json j = {{"n_max", c.n_max}, {"k_max", c.k_max}, {"classes", std::move(classes)}};
  return j.dump();
}

}  // namespace vincular
