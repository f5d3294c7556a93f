#include "vincular/matcher.hpp"

#include <optional>
#include <string>

#include "vincular/errors.hpp"

namespace vincular {
namespace {

// Depth-first search over blocks, left to right. Letters are assigned one
// pattern position at a time and checked against every earlier position, so
// a mismatch prunes as soon as it appears.
class Search {
 public:
  Search(std::span<const Letter> word, const Pattern& p, const RoleConstraint* c,
         std::optional<std::size_t> last)
      : word_(word), p_(p), pat_(p.letters()), idx_(p.size()) {
    if (c) {
      switch (c->role) {
        case Role::Smallest: role_pos_ = find_letter(1); break;
        case Role::Largest: role_pos_ = find_letter(p.largest()); break;
        case Role::Position:
          if (c->position < 1 || c->position > p.size()) {
            throw ValidationError("role position " + std::to_string(c->position) +
                                  " outside [1, " + std::to_string(p.size()) + "]");
          }
          role_pos_ = c->position - 1;
          break;
      }
      role_value_ = c->value;
    }
    const auto& blocks = p.blocks();
    tail_.assign(blocks.size() + 1, 0);
    for (std::size_t b = blocks.size(); b-- > 0;) tail_[b] = tail_[b + 1] + blocks[b].length;
    if (last) {
      if (*last + 1 < blocks.back().length) {
        impossible_ = true;
      } else {
        last_block_start_ = *last + 1 - blocks.back().length;
      }
    }
  }

  bool run(const OccurrenceVisitor& visit) {
    if (impossible_ || word_.size() < p_.size()) return true;
    visit_ = &visit;
    return dfs(0, 0);
  }

 private:
  std::size_t find_letter(Letter v) const {
    for (std::size_t i = 0; i < pat_.size(); ++i) {
      if (pat_[i] == v) return i;
    }
    return 0;
  }

  bool consistent(std::size_t q) const {
    const Letter v = word_[idx_[q]];
    if (role_pos_ && *role_pos_ == q && v != role_value_) return false;
    for (std::size_t r = 0; r < q; ++r) {
      const Letter u = word_[idx_[r]];
      const Letter a = pat_[r];
      const Letter b = pat_[q];
      if ((a < b) != (u < v) || (a == b) != (u == v)) return false;
    }
    return true;
  }

  bool dfs(std::size_t b, std::size_t min_start) {
    const auto& blocks = p_.blocks();
    if (b == blocks.size()) return (*visit_)(idx_);
    const Block& blk = blocks[b];
    if (word_.size() < tail_[b]) return true;
    std::size_t lo = min_start;
    std::size_t hi = word_.size() - tail_[b];
    if (b + 1 == blocks.size() && last_block_start_) {
      if (*last_block_start_ < lo || *last_block_start_ > hi) return true;
      lo = hi = *last_block_start_;
    }
    for (std::size_t s = lo; s <= hi; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < blk.length; ++i) {
        idx_[blk.start + i] = s + i;
        if (!consistent(blk.start + i)) {
          ok = false;
          break;
        }
      }
      if (ok && !dfs(b + 1, s + blk.length)) return false;
    }
    return true;
  }

  std::span<const Letter> word_;
  const Pattern& p_;
  std::span<const Letter> pat_;
  std::vector<std::size_t> idx_;
  std::vector<std::size_t> tail_;
  std::optional<std::size_t> role_pos_;
  Letter role_value_ = 0;
  std::optional<std::size_t> last_block_start_;
  bool impossible_ = false;
  const OccurrenceVisitor* visit_ = nullptr;
};

std::vector<Occurrence> collect(std::span<const Letter> word, const Pattern& p,
                                const RoleConstraint* c) {
  std::vector<Occurrence> out;
  for_each_occurrence(
      word, p,
      [&](std::span<const std::size_t> idx) {
        out.push_back({{idx.begin(), idx.end()}});
        return true;
      },
      c);
  return out;
}

}  // namespace

bool for_each_occurrence(std::span<const Letter> word, const Pattern& p,
                         const OccurrenceVisitor& visit, const RoleConstraint* constraint) {
  return Search(word, p, constraint, std::nullopt).run(visit);
}

bool contains(std::span<const Letter> word, const Pattern& p) {
  return !for_each_occurrence(word, p, [](auto) { return false; });
}

bool contains(const Word& w, const Pattern& p) { return contains(w.letters(), p); }

bool contains_ending_at(std::span<const Letter> word, const Pattern& p, std::size_t last) {
  if (last >= word.size()) return false;
  return !Search(word, p, nullptr, last).run([](auto) { return false; });
}

std::vector<Occurrence> find_occurrences(std::span<const Letter> word, const Pattern& p) {
  return collect(word, p, nullptr);
}

std::vector<Occurrence> find_occurrences(const Word& w, const Pattern& p) {
  return collect(w.letters(), p, nullptr);
}

std::vector<Occurrence> find_role_occurrences(std::span<const Letter> word, const Pattern& p,
                                              const RoleConstraint& c) {
  return collect(word, p, &c);
}

std::vector<Occurrence> find_role_occurrences(const Word& w, const Pattern& p,
                                              const RoleConstraint& c) {
  return collect(w.letters(), p, &c);
}

std::size_t count_occurrences(std::span<const Letter> word, const Pattern& p) {
  std::size_t n = 0;
  for_each_occurrence(word, p, [&](auto) {
    ++n;
    return true;
  });
  return n;
}

std::size_t count_occurrences(const Word& w, const Pattern& p) {
  return count_occurrences(w.letters(), p);
}

}  // namespace vincular
