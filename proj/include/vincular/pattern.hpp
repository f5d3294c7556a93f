#pragma once

// Words over [k], vincular (dashed) patterns, and the operations that act on
// both: reduction, reverse, complement, and the dash notation "1-34-2".

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vincular {

using Letter = int;

/// A finite sequence over the alphabet [k] = {1, ..., k}.
///
/// The empty word is allowed for any k; `Word{}` has alphabet size 0.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, int alphabet_size);

  /// Parses "215562" (one digit per letter) or "10,3,7" (comma separated).
  static Word parse(std::string_view text, int alphabet_size);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int alphabet_size() const noexcept { return alphabet_size_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Digit string when k <= 9, comma-separated integers otherwise.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  int alphabet_size_ = 0;
};

/// Maximal run of mutually adjacent pattern positions, 0-based.
struct Block {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// A reduced word together with its adjacency set X.
///
/// Position j (1-based, 1 <= j < m) is in X when letters j and j+1 must be
/// consecutive in every occurrence. In the dash notation a '-' is written
/// exactly between the positions not in X.
class Pattern {
 public:
  /// `adjacencies` holds 1-based positions; throws ValidationError when the
  /// letters are not reduced or a position is out of range.
  Pattern(std::vector<Letter> letters, const std::vector<int>& adjacencies);

  /// Pattern whose blocks are the given letter groups, separated by dashes.
  static Pattern from_blocks(const std::vector<std::vector<Letter>>& blocks);

  /// Consecutive pattern (a single block).
  static Pattern subword(std::vector<Letter> letters);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  /// Number of distinct letters; the largest letter of a reduced word.
  Letter largest() const noexcept { return largest_; }

  /// True when 1-based position j lies in X.
  bool adjacent(std::size_t j) const { return adjacent_[j - 1]; }
  std::vector<int> adjacencies() const;

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  bool is_subword() const noexcept { return blocks_.size() == 1; }

  /// Block lengths, e.g. {3, 1} for "132-4".
  std::vector<int> type() const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.letters_ == b.letters_ && a.adjacent_ == b.adjacent_;
  }
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b);

 private:
  std::vector<Letter> letters_;
  std::vector<bool> adjacent_;
  std::vector<Block> blocks_;
  Letter largest_ = 0;
};

/// Relabels the i-th smallest distinct letter as i. The result's alphabet
/// size is the number of distinct letters (0 for the empty word).
Word reduce(const Word& w);

/// True when every value 1..max appears at least once.
bool is_reduced(std::span<const Letter> letters);

Word reverse(const Word& w);
/// v -> k + 1 - v.
Word complement(const Word& w);

/// Letters and dashes read backwards.
Pattern reverse(const Pattern& p);
/// v -> l + 1 - v with the dashes kept in place.
Pattern complement(const Pattern& p);

/// Grammar: block ('-' block)*, block := ['1'-'9']+.
Pattern parse_pattern(std::string_view text);
std::string format_pattern(const Pattern& p);

/// Every pattern with the given block lengths, over all reduced words of
/// length sum(type), in lexicographic order of letters.
std::vector<Pattern> all_patterns(std::span<const int> type);

/// All reduced words of length m in lexicographic order.
std::vector<std::vector<Letter>> reduced_words(std::size_t m);

}  // namespace vincular
