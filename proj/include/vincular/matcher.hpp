#pragma once

// Occurrences of vincular patterns in words.
//
// Index tuples are 0-based here; the CLI prints them 1-based. All lists are in
// lexicographic order of the full index tuple, which is what "leftmost" and
// "rightmost" refer to throughout the library.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "vincular/pattern.hpp"

namespace vincular {

struct Occurrence {
  std::vector<std::size_t> indices;

  std::size_t start() const { return indices.front(); }
  std::size_t last() const { return indices.back(); }

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

enum class Role { Smallest, Largest, Position };

/// Fixes which word letter plays a pattern role. `position` is 1-based and
/// only read when role == Role::Position.
struct RoleConstraint {
  Role role = Role::Smallest;
  std::size_t position = 0;
  Letter value = 0;

  static RoleConstraint smallest(Letter v) { return {Role::Smallest, 0, v}; }
  static RoleConstraint largest(Letter v) { return {Role::Largest, 0, v}; }
  static RoleConstraint at(std::size_t position, Letter v) {
    return {Role::Position, position, v};
  }
};

/// Callback receives each occurrence in lexicographic order; return false to stop.
using OccurrenceVisitor = std::function<bool(std::span<const std::size_t>)>;

/// Visits occurrences, optionally role-constrained. Returns false when the
/// visitor stopped the scan early.
bool for_each_occurrence(std::span<const Letter> word, const Pattern& p,
                         const OccurrenceVisitor& visit,
                         const RoleConstraint* constraint = nullptr);

bool contains(std::span<const Letter> word, const Pattern& p);
bool contains(const Word& w, const Pattern& p);

/// True when some occurrence ends exactly at index `last`. Avoidance of a
/// word is decided by checking this for each new letter of a prefix.
bool contains_ending_at(std::span<const Letter> word, const Pattern& p, std::size_t last);

std::vector<Occurrence> find_occurrences(std::span<const Letter> word, const Pattern& p);
std::vector<Occurrence> find_occurrences(const Word& w, const Pattern& p);

/// Throws ValidationError for a position outside [1, |p|].
std::vector<Occurrence> find_role_occurrences(std::span<const Letter> word, const Pattern& p,
                                              const RoleConstraint& c);
std::vector<Occurrence> find_role_occurrences(const Word& w, const Pattern& p,
                                              const RoleConstraint& c);

std::size_t count_occurrences(std::span<const Letter> word, const Pattern& p);
std::size_t count_occurrences(const Word& w, const Pattern& p);

}  // namespace vincular
