#include "vincular/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "vincular/errors.hpp"

namespace vincular {

Word::Word(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 0) throw ValidationError("alphabet size must be non-negative");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1 || letters_[i] > alphabet_size_) {
      throw ValidationError("letter " + std::to_string(letters_[i]) + " at index " +
                            std::to_string(i) + " is outside [1, " +
                            std::to_string(alphabet_size_) + "]");
    }
  }
}

Word Word::parse(std::string_view text, int alphabet_size) {
  std::vector<Letter> letters;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c < '1' || c > '9') throw ParseError("expected a digit 1-9 in word", i);
      letters.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view item = text.substr(pos, end - pos);
      Letter value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
        throw ParseError("expected a positive integer in word", pos);
      }
      letters.push_back(value);
      pos = end + 1;
    }
  }
  return Word(std::move(letters), alphabet_size);
}

std::string Word::to_string() const {
  std::string out;
  bool digits = alphabet_size_ <= 9;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + letters_[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

bool is_reduced(std::span<const Letter> letters) {
  if (letters.empty()) return true;
  Letter top = *std::max_element(letters.begin(), letters.end());
  if (*std::min_element(letters.begin(), letters.end()) < 1) return false;
  std::vector<bool> seen(static_cast<std::size_t>(top) + 1, false);
  for (Letter v : letters) seen[static_cast<std::size_t>(v)] = true;
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

Pattern::Pattern(std::vector<Letter> letters, const std::vector<int>& adjacencies)
    : letters_(std::move(letters)) {
  if (letters_.empty()) throw ValidationError("pattern must be non-empty");
  if (!is_reduced(letters_)) {
    std::string shown;
    for (Letter v : letters_) shown += std::to_string(v) + " ";
    throw ValidationError("pattern letters are not reduced: " + shown);
  }
  largest_ = *std::max_element(letters_.begin(), letters_.end());
  adjacent_.assign(letters_.size() - 1, false);
  for (int j : adjacencies) {
    if (j < 1 || static_cast<std::size_t>(j) >= letters_.size()) {
      throw ValidationError("adjacency position " + std::to_string(j) + " outside [1, " +
                            std::to_string(letters_.size() - 1) + "]");
    }
    adjacent_[static_cast<std::size_t>(j) - 1] = true;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    if (!adjacent_[i]) {
      blocks_.push_back({start, i + 1 - start});
      start = i + 1;
    }
  }
  blocks_.push_back({start, letters_.size() - start});
}

Pattern Pattern::from_blocks(const std::vector<std::vector<Letter>>& blocks) {
  std::vector<Letter> letters;
  std::vector<int> adjacencies;
  for (const auto& block : blocks) {
    if (block.empty()) throw ValidationError("pattern blocks must be non-empty");
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) adjacencies.push_back(static_cast<int>(letters.size()));
      letters.push_back(block[i]);
    }
  }
  return Pattern(std::move(letters), adjacencies);
}

Pattern Pattern::subword(std::vector<Letter> letters) {
  return from_blocks({std::move(letters)});
}

std::vector<int> Pattern::adjacencies() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < adjacent_.size(); ++i) {
    if (adjacent_[i]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::vector<int> Pattern::type() const {
  std::vector<int> out;
  for (const Block& b : blocks_) out.push_back(static_cast<int>(b.length));
  return out;
}

std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
  if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.adjacent_.begin(), a.adjacent_.end(),
                                                b.adjacent_.begin(), b.adjacent_.end());
}

Word reduce(const Word& w) {
  std::vector<Letter> values(w.letters().begin(), w.letters().end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter v : w.letters()) {
    out.push_back(static_cast<Letter>(std::lower_bound(values.begin(), values.end(), v) -
                                      values.begin()) + 1);
  }
  return Word(std::move(out), static_cast<int>(values.size()));
}

Word reverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out), w.alphabet_size());
}

Word complement(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter v : w.letters()) out.push_back(w.alphabet_size() + 1 - v);
  return Word(std::move(out), w.alphabet_size());
}

Pattern reverse(const Pattern& p) {
  std::vector<Letter> letters(p.letters().rbegin(), p.letters().rend());
  std::vector<int> adjacencies;
  const int m = static_cast<int>(p.size());
  for (int j : p.adjacencies()) adjacencies.push_back(m - j);
  return Pattern(std::move(letters), adjacencies);
}

Pattern complement(const Pattern& p) {
  std::vector<Letter> letters;
  for (Letter v : p.letters()) letters.push_back(p.largest() + 1 - v);
  return Pattern(std::move(letters), p.adjacencies());
}

Pattern parse_pattern(std::string_view text) {
  if (text.empty()) throw ParseError("empty pattern", 0);
  std::vector<Letter> letters;
  std::vector<int> adjacencies;
  bool after_dash = true;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '-') {
      if (after_dash) {
        throw ParseError(i == 0 ? "leading dash" : "double dash", i);
      }
      after_dash = true;
    } else if (c >= '1' && c <= '9') {
      if (!after_dash) adjacencies.push_back(static_cast<int>(letters.size()));
      letters.push_back(c - '0');
      after_dash = false;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (after_dash) throw ParseError("trailing dash", text.size() - 1);
  return Pattern(std::move(letters), adjacencies);
}

std::string format_pattern(const Pattern& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0 && !p.adjacent(i)) out.push_back('-');
    Letter v = p.letters()[i];
    if (v <= 9) {
      out.push_back(static_cast<char>('0' + v));
    } else {
      // Multi-digit letters have no unambiguous dash rendering; bracket them.
      out += "[" + std::to_string(v) + "]";
    }
  }
  return out;
}

std::vector<std::vector<Letter>> reduced_words(std::size_t m) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> word(m, 1);
  if (m == 0) return {{}};
  // Odometer over [m]^m, keeping the reduced ones; m is small (<= 6 in practice).
  while (true) {
    if (is_reduced(word)) out.push_back(word);
    std::size_t i = m;
    while (i > 0 && word[i - 1] == static_cast<Letter>(m)) {
      word[i - 1] = 1;
      --i;
    }
    if (i == 0) break;
    ++word[i - 1];
  }
  return out;
}

std::vector<Pattern> all_patterns(std::span<const int> type) {
  if (type.empty()) throw ValidationError("pattern type must have at least one part");
  for (int part : type) {
    if (part < 1) throw ValidationError("pattern type parts must be positive");
  }
  const auto m = static_cast<std::size_t>(std::accumulate(type.begin(), type.end(), 0));
  std::vector<int> adjacencies;
  int position = 0;
  for (int part : type) {
    for (int i = 1; i < part; ++i) adjacencies.push_back(position + i);
    position += part;
  }
  std::vector<Pattern> out;
  for (auto& letters : reduced_words(m)) out.emplace_back(std::move(letters), adjacencies);
  return out;
}

}  // namespace vincular
