#pragma once

// Avoider counting over [k]^n, refined counts, equivalence checks, and the
// Wilf-classification engine.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vincular/pattern.hpp"

namespace vincular {

using Count = std::uint64_t;

/// Upper bound on k^n for a single (n, k) cell.
struct Guardrail {
  unsigned long long max_cell = 100000000ULL;

  /// Default cap, replaced by $VINCULAR_GUARDRAIL when set to a positive integer.
  static Guardrail from_env();

  /// Throws GuardrailError when k^n exceeds the cap.
  void check(int n, int k) const;
};

Count count_avoiders(int n, int k, const Pattern& p, const Guardrail& g = Guardrail::from_env());

Count count_avoiders_prefix(int n, int k, const Pattern& p, const Word& prefix,
                            const Guardrail& g = Guardrail::from_env());

/// `multiplicity[v - 1]` copies of letter v; the total must equal n.
Count count_avoiders_by_content(int n, int k, const Pattern& p,
                                const std::vector<int>& multiplicity,
                                const Guardrail& g = Guardrail::from_env());

/// a(0..n_max, k) from a single prefix-pruned search.
std::vector<Count> avoider_counts_upto(int n_max, int k, const Pattern& p,
                                       const Guardrail& g = Guardrail::from_env());

/// result[n][a - 1] = number of avoiders of length n starting with a (n >= 1).
std::vector<std::vector<Count>> avoider_counts_by_first_letter(
    int n_max, int k, const Pattern& p, const Guardrail& g = Guardrail::from_env());

/// Avoider counts of length n keyed by letter multiplicities.
std::map<std::vector<int>, Count> avoider_counts_by_content(
    int n, int k, const Pattern& p, const Guardrail& g = Guardrail::from_env());

struct CountTable {
  Pattern pattern;
  int n_max = 0;
  int k_max = 0;
  std::map<std::pair<int, int>, Count> entries;  // (n, k) -> a(n, k)

  Count at(int n, int k) const { return entries.at({n, k}); }
};

/// Cells n in [0, n_max], k in [1, k_max].
CountTable count_table(const Pattern& p, int n_max, int k_max,
                       const Guardrail& g = Guardrail::from_env());

/// One JSON object per line: {"pattern":..,"n":..,"k":..,"count":..}.
std::string to_jsonl(const CountTable& t);

enum class Refinement { None, FirstLetter, Content };

struct CellComparison {
  int n = 0;
  int k = 0;
  std::string cell;  // refinement cell, e.g. "first=2" or "content=2,1,1"
  Count left = 0;
  Count right = 0;
};

struct EquivalenceReport {
  Pattern left;
  Pattern right;
  Refinement refinement = Refinement::None;
  std::size_t cells_compared = 0;
  std::vector<CellComparison> mismatches;

  bool passed() const { return mismatches.empty(); }
  std::string summary() const;
};

EquivalenceReport verify_equivalence(const Pattern& p, const Pattern& q, int n_max, int k_max,
                                     Refinement refinement = Refinement::None,
                                     const Guardrail& g = Guardrail::from_env());

struct WilfClassification {
  std::vector<Pattern> universe;
  int n_max = 0;
  int k_max = 0;
  /// Signature of universe[i]: a(n, k) for k = 1..k_max, n = 0..n_max.
  std::vector<std::vector<Count>> signatures;
  /// Indices into universe; classes ordered by first member.
  std::vector<std::vector<std::size_t>> classes;
  /// Orbits under {id, r, c, rc}, restricted to the universe.
  std::vector<std::vector<std::size_t>> symmetry_orbits;

  std::size_t class_of(std::size_t i) const;
  std::size_t orbit_of(std::size_t i) const;
  bool singleton(std::size_t class_index) const { return classes[class_index].size() == 1; }
  /// First (n, k) where two signatures differ, if any.
  std::optional<std::pair<int, int>> witness(std::size_t i, std::size_t j) const;
};

/// Patterns are counted in parallel; the result does not depend on scheduling.
WilfClassification wilf_classify(const std::vector<Pattern>& universe, int n_max, int k_max,
                                 const Guardrail& g = Guardrail::from_env());

/// {"n_max":..,"k_max":..,"classes":[{"patterns":[..],"orbits":[[..],..],"singleton":..}]}
std::string to_json(const WilfClassification& c);

}  // namespace vincular
