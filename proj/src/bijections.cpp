#include "vincular/bijections.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "vincular/errors.hpp"
#include "vincular/matcher.hpp"

namespace vincular {
namespace {

std::string occurrence_text(const Occurrence& o) {
  std::string out = "(";
  for (std::size_t i = 0; i < o.indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(o.indices[i] + 1);
  }
  return out + ")";
}

void require_avoids(const Word& w, const Pattern& p) {
  std::optional<Occurrence> first;
  for_each_occurrence(w.letters(), p, [&](std::span<const std::size_t> idx) {
    first = Occurrence{{idx.begin(), idx.end()}};
    return false;
  });
  if (first) {
    throw DomainError("word " + w.to_string() + " contains " + format_pattern(p) +
                      " at positions " + occurrence_text(*first));
  }
}

std::vector<Letter> shifted(std::span<const Letter> letters, int by) {
  std::vector<Letter> out;
  for (Letter v : letters) out.push_back(v + by);
  return out;
}

std::vector<Letter> as_vector(std::span<const Letter> s) { return {s.begin(), s.end()}; }

bool weakly_monotonic(std::span<const Letter> s) {
  return std::is_sorted(s.begin(), s.end()) || std::is_sorted(s.rbegin(), s.rend());
}

class Reversal final : public StringRewriter {
 public:
  std::string name() const override { return "reverse"; }
  std::vector<Letter> forward(std::span<const Letter> s, int) const override {
    return {s.rbegin(), s.rend()};
  }
  std::vector<Letter> inverse(std::span<const Letter> s, int) const override {
    return {s.rbegin(), s.rend()};
  }
};

class Identity final : public StringRewriter {
 public:
  std::string name() const override { return "identity"; }
  std::vector<Letter> forward(std::span<const Letter> s, int) const override {
    return as_vector(s);
  }
  std::vector<Letter> inverse(std::span<const Letter> s, int) const override {
    return as_vector(s);
  }
};

// Leftmost or rightmost occurrence in lexicographic tuple order.
std::optional<Occurrence> pick(const std::vector<Occurrence>& occ, bool leftmost) {
  if (occ.empty()) return std::nullopt;
  return leftmost ? occ.front() : occ.back();
}

// ---- Governing blocks -------------------------------------------------------

class GoverningBlockMap final : public WordMap {
 public:
  GoverningBlockMap(Pattern tau, Pattern rho, Pattern sigma,
                    std::shared_ptr<const StringRewriter> g)
      : tau_(std::move(tau)), rho_(std::move(rho)), sigma_(std::move(sigma)), g_(std::move(g)),
        s_(tau_.largest()) {
    if (!tau_.is_subword() || !rho_.is_subword() || !sigma_.is_subword()) {
      throw DomainError("tau, rho and sigma must be subword patterns");
    }
    if (tau_.largest() != rho_.largest()) {
      throw DomainError("tau and rho must share their largest letter");
    }
    if (!weakly_monotonic(sigma_.letters())) {
      throw DomainError("sigma " + format_pattern(sigma_) + " is not monotonic");
    }
    if (!g_) throw DomainError("a string rewriter is required");
    const auto tail = shifted(sigma_.letters(), s_);
    source_ = std::make_unique<Pattern>(Pattern::from_blocks({as_vector(tau_.letters()), tail}));
    target_ = std::make_unique<Pattern>(Pattern::from_blocks({as_vector(rho_.letters()), tail}));
  }

  std::string tag() const override { return "2.1"; }
  Pattern source() const override { return *source_; }
  Pattern target() const override { return *target_; }
  bool preserves_content() const override { return false; }

 protected:
  MapResult run(const Word& w, Direction d) const override {
    const int k = w.alphabet_size();
    std::vector<Letter> out(w.letters().begin(), w.letters().end());
    const auto letters = w.letters();
    const std::size_t c = sigma_.size();
    if (s_ + sigma_.largest() > k) return {w, {w}};

    // Governing sequence: a_1 > a_2 > ..., l_1 < l_2 < ... (0-based starts).
    std::vector<std::pair<Letter, std::size_t>> gov;
    Letter hi = k;
    std::size_t min_start = 0;
    while (true) {
      std::optional<std::pair<Letter, std::size_t>> found;
      for (Letter b = hi; b >= s_ + 1 && !found; --b) {
        const auto occ = find_role_occurrences(letters, sigma_, RoleConstraint::smallest(b));
        if (!occ.empty() && occ.back().start() >= min_start) found = {{b, occ.back().start()}};
      }
      if (!found) break;
      gov.push_back(*found);
      hi = found->first - 1;
      min_start = found->second + c;
    }
    if (gov.empty()) return {w, {w}};

    // Region before l_1 over [a_1 - 1], then [l_j + c, l_{j+1}) over [a_{j+1} - 1].
    auto rewrite = [&](std::size_t from, std::size_t to, Letter bound) {
      std::size_t i = from;
      while (i < to) {
        if (out[i] > bound) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < to && out[j] <= bound) ++j;
        std::span<const Letter> run(out.data() + i, j - i);
        auto image = d == Direction::Forward ? g_->forward(run, bound) : g_->inverse(run, bound);
        if (image.size() != run.size()) throw DomainError("rewriter " + g_->name() + " changed length");
        std::copy(image.begin(), image.end(), out.begin() + static_cast<std::ptrdiff_t>(i));
        i = j;
      }
    };
    rewrite(0, gov[0].second, gov[0].first - 1);
    for (std::size_t j = 0; j + 1 < gov.size(); ++j) {
      rewrite(gov[j].second + c, gov[j + 1].second, gov[j + 1].first - 1);
    }
    Word result(std::move(out), k);
    return {result, {result}};
  }

 private:
  Pattern tau_, rho_, sigma_;
  std::shared_ptr<const StringRewriter> g_;
  Letter s_;
  std::unique_ptr<Pattern> source_, target_;
};

// ---- Letter migration -------------------------------------------------------

class LetterMigrationMap final : public WordMap {
 public:
  explicit LetterMigrationMap(Pattern sigma)
      : sigma_(std::move(sigma)),
        source_(make(sigma_, {sigma_.largest(), sigma_.largest() + 1})),
        target_(make(sigma_, {sigma_.largest() + 1, sigma_.largest()})) {}

  std::string tag() const override { return "2.5"; }
  Pattern source() const override { return source_; }
  Pattern target() const override { return target_; }
  bool preserves_content() const override { return true; }

 protected:
  MapResult run(const Word& w, Direction d) const override {
    const int k = w.alphabet_size();
    std::vector<Letter> cur(w.letters().begin(), w.letters().end());
    const std::size_t a = sigma_.size();
    const Letter r = sigma_.largest();
    MapResult result{w, {}};
    const bool fwd = d == Direction::Forward;
    Letter prev = fwd ? 0 : k + 1;
    while (true) {
      // Smallest s above prev (forward) or largest below prev (inverse).
      std::optional<std::size_t> start;
      Letter s = 0;
      for (Letter v = fwd ? prev + 1 : prev - 1; fwd ? v <= k : v >= 1; v += fwd ? 1 : -1) {
        auto occ = find_role_occurrences(cur, sigma_, RoleConstraint::at(role_position(r), v));
        if (!occ.empty()) {
          start = occ.front().start();
          s = v;
          break;
        }
      }
      if (!start) break;
      if (result.stages.size() >= static_cast<std::size_t>(k)) {
        throw FormulaError("letter migration did not terminate within k stages");
      }
      // Within each maximal string of letters >= s right of the occurrence,
      // move the copies of s to the front (forward) or back (inverse).
      std::size_t i = *start + a;
      while (i < cur.size()) {
        if (cur[i] < s) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < cur.size() && cur[j] >= s) ++j;
        auto first = cur.begin() + static_cast<std::ptrdiff_t>(i);
        auto last = cur.begin() + static_cast<std::ptrdiff_t>(j);
        if (fwd) {
          std::stable_partition(first, last, [&](Letter v) { return v == s; });
        } else {
          std::stable_partition(first, last, [&](Letter v) { return v != s; });
        }
        i = j;
      }
      result.stages.emplace_back(cur, k);
      prev = s;
    }
    result.word = Word(std::move(cur), k);
    if (result.stages.empty()) result.stages.push_back(result.word);
    return result;
  }

 private:
  static Pattern make(const Pattern& sigma, std::vector<Letter> tail) {
    if (!sigma.is_subword()) throw DomainError("sigma must be a subword pattern");
    return Pattern::from_blocks({as_vector(sigma.letters()), std::move(tail)});
  }

  // Any position of sigma holding its largest letter.
  std::size_t role_position(Letter r) const {
    const auto l = sigma_.letters();
    return static_cast<std::size_t>(std::find(l.begin(), l.end(), r) - l.begin()) + 1;
  }

  Pattern sigma_;
  Pattern source_;
  Pattern target_;
};

// ---- Staged swaps -----------------------------------------------------------

// One direction of a swap map: for each value class in turn, while the word
// has an occurrence of `pattern` whose letter at `role` equals the value,
// take the leftmost or rightmost one and swap two of its positions.
struct SwapPass {
  Pattern pattern;
  std::size_t role;  // 1-based pattern position
  bool descending;
  bool leftmost;
  std::size_t swap_a, swap_b;  // 0-based pattern positions
  // Value range [lo(k), hi(k)].
  std::function<int(int)> lo, hi;
};

class SwapMap final : public WordMap {
 public:
  SwapMap(std::string tag, SwapPass fwd, SwapPass inv)
      : tag_(std::move(tag)), fwd_(std::move(fwd)), inv_(std::move(inv)) {}

  std::string tag() const override { return tag_; }
  Pattern source() const override { return inv_.pattern; }
  Pattern target() const override { return fwd_.pattern; }
  bool preserves_content() const override { return true; }

 protected:
  MapResult run(const Word& w, Direction d) const override {
    const SwapPass& pass = d == Direction::Forward ? fwd_ : inv_;
    const int k = w.alphabet_size();
    std::vector<Letter> cur(w.letters().begin(), w.letters().end());
    MapResult result{w, {}};
    const int lo = pass.lo(k);
    const int hi = pass.hi(k);
    const std::size_t limit = cur.size() * cur.size() + 1;
    for (int step = 0; step <= hi - lo; ++step) {
      const Letter v = pass.descending ? hi - step : lo + step;
      for (std::size_t guard = 0;; ++guard) {
        if (guard > limit) throw FormulaError("swap stage did not terminate");
        auto o = pick(find_role_occurrences(cur, pass.pattern, RoleConstraint::at(pass.role, v)),
                      pass.leftmost);
        if (!o) break;
        std::swap(cur[o->indices[pass.swap_a]], cur[o->indices[pass.swap_b]]);
      }
      result.stages.emplace_back(cur, k);
    }
    result.word = Word(std::move(cur), k);
    if (result.stages.empty()) result.stages.push_back(result.word);
    return result;
  }

 private:
  std::string tag_;
  SwapPass fwd_, inv_;
};

}  // namespace

MapResult WordMap::apply(const Word& w, Direction d) const {
  require_avoids(w, d == Direction::Forward ? source() : target());
  return run(w, d);
}

std::shared_ptr<const StringRewriter> reversal_rewriter() {
  static const auto g = std::make_shared<const Reversal>();
  return g;
}

std::shared_ptr<const StringRewriter> identity_rewriter() {
  static const auto g = std::make_shared<const Identity>();
  return g;
}

std::shared_ptr<const StringRewriter> rewriter_by_name(std::string_view name) {
  if (name == "reverse") return reversal_rewriter();
  if (name == "identity") return identity_rewriter();
  throw ValidationError("unknown string rewriter '" + std::string(name) +
                        "'; expected reverse or identity");
}

ContractReport check_rewriter_contract(const StringRewriter& g, const Pattern& tau,
                                       const Pattern& rho, int samples, std::uint32_t seed) {
  std::mt19937 rng(seed);
  for (int t = 0; t < samples; ++t) {
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    const int len = std::uniform_int_distribution<int>(0, 10)(rng);
    std::vector<Letter> s(static_cast<std::size_t>(len));
    for (auto& v : s) v = std::uniform_int_distribution<Letter>(1, m)(rng);
    const auto image = g.forward(s, m);
    const Word in(s, m);
    auto fail = [&](const std::string& why) {
      return ContractReport{false, g.name() + " " + why + " on " + in.to_string()};
    };
    if (image.size() != s.size()) return fail("changes length");
    if (std::any_of(image.begin(), image.end(), [&](Letter v) { return v < 1 || v > m; })) {
      return fail("leaves the alphabet");
    }
    if (g.inverse(image, m) != s) return fail("is not inverted by its inverse");
    if (contains(std::span<const Letter>(s), tau) != contains(std::span<const Letter>(image), rho)) {
      return fail("does not carry " + format_pattern(tau) + "-avoidance to " +
                  format_pattern(rho) + "-avoidance");
    }
  }
  return {true, g.name() + " passed " + std::to_string(samples) + " sampled strings"};
}

std::unique_ptr<WordMap> make_governing_block_map(const Pattern& tau, const Pattern& rho,
                                                  const Pattern& sigma,
                                                  std::shared_ptr<const StringRewriter> g) {
  return std::make_unique<GoverningBlockMap>(tau, rho, sigma, std::move(g));
}

std::unique_ptr<WordMap> make_letter_migration_map(const Pattern& sigma) {
  return std::make_unique<LetterMigrationMap>(sigma);
}

std::unique_ptr<WordMap> make_swap_map_134_2() {
  // Forward clears 143-2 occurrences by the value of the '4', largest first,
  // swapping the '4' with its right neighbour.
  return std::make_unique<SwapMap>(
      "3.3a",
      SwapPass{parse_pattern("143-2"), 2, true, true, 1, 2, [](int) { return 4; },
               [](int k) { return k; }},
      SwapPass{parse_pattern("134-2"), 3, false, false, 1, 2, [](int) { return 4; },
               [](int k) { return k; }});
}

std::unique_ptr<WordMap> make_swap_map_124_3() {
  // Forward clears 214-3 occurrences by the value of the '1', smallest first,
  // swapping the letters in the '1' and '2' roles.
  return std::make_unique<SwapMap>(
      "3.3b",
      SwapPass{parse_pattern("214-3"), 2, false, false, 0, 1, [](int) { return 1; },
               [](int k) { return k - 3; }},
      SwapPass{parse_pattern("124-3"), 1, true, true, 0, 1, [](int) { return 1; },
               [](int k) { return k - 3; }});
}

std::unique_ptr<WordMap> make_swap_map_142_3() {
  // Forward clears 241-3 occurrences by the value of the '2', largest first,
  // swapping the two smallest letters.
  return std::make_unique<SwapMap>(
      "3.3c",
      SwapPass{parse_pattern("241-3"), 1, true, true, 0, 2, [](int) { return 2; },
               [](int k) { return k - 2; }},
      SwapPass{parse_pattern("142-3"), 3, false, false, 0, 2, [](int) { return 2; },
               [](int k) { return k - 2; }});
}

const std::vector<std::string>& map_tags() {
  static const std::vector<std::string> tags = {"2.1", "2.5", "3.3a", "3.3b", "3.3c"};
  return tags;
}

std::unique_ptr<WordMap> make_map(std::string_view tag, const MapOptions& o) {
  if (tag == "2.1") {
    return make_governing_block_map(parse_pattern(o.tau), parse_pattern(o.rho),
                                    parse_pattern(o.sigma.empty() ? "123" : o.sigma),
                                    rewriter_by_name(o.rewriter));
  }
  if (tag == "2.5") return make_letter_migration_map(parse_pattern(o.sigma.empty() ? "11" : o.sigma));
  if (tag == "3.3a") return make_swap_map_134_2();
  if (tag == "3.3b") return make_swap_map_124_3();
  if (tag == "3.3c") return make_swap_map_142_3();
  throw ValidationError("unknown map tag '" + std::string(tag) +
                        "'; expected 2.1, 2.5, 3.3a, 3.3b or 3.3c");
}

}  // namespace vincular
