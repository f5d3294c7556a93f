#pragma once

// Explicit bijections between avoider sets A_source(n,k) -> A_target(n,k).

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vincular/pattern.hpp"

namespace vincular {

/// Length-preserving bijection on words over [m], for every m.
class StringRewriter {
 public:
  virtual ~StringRewriter() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Letter> forward(std::span<const Letter> s, int m) const = 0;
  virtual std::vector<Letter> inverse(std::span<const Letter> s, int m) const = 0;
};

std::shared_ptr<const StringRewriter> reversal_rewriter();
std::shared_ptr<const StringRewriter> identity_rewriter();
/// "reverse" or "identity"; throws ValidationError otherwise.
std::shared_ptr<const StringRewriter> rewriter_by_name(std::string_view name);

struct ContractReport {
  bool passed = true;
  std::string detail;
};

/// Samples random strings and checks that g is invertible, keeps length and
/// alphabet, and sends tau-avoiders to rho-avoiders and containers to containers.
ContractReport check_rewriter_contract(const StringRewriter& g, const Pattern& tau,
                                       const Pattern& rho, int samples = 2000,
                                       std::uint32_t seed = 20130101);

enum class Direction { Forward, Inverse };

struct MapResult {
  Word word;
  /// Intermediate words after each stage, ending with `word`.
  std::vector<Word> stages;
};

class WordMap {
 public:
  virtual ~WordMap() = default;

  virtual std::string tag() const = 0;
  /// Forward maps avoiders of source() onto avoiders of target().
  virtual Pattern source() const = 0;
  virtual Pattern target() const = 0;
  /// True when every image is a rearrangement of its input.
  virtual bool preserves_content() const = 0;

  /// Throws DomainError naming an occurrence when the input does not avoid
  /// the pattern of the chosen direction.
  MapResult apply(const Word& w, Direction d) const;
  /// Runs the construction without the avoidance precondition, for replaying
  /// traces on words outside the domain. Bijectivity is only claimed on the domain.
  MapResult apply_unchecked(const Word& w, Direction d) const { return run(w, d); }
  Word forward(const Word& w) const { return apply(w, Direction::Forward).word; }
  Word inverse(const Word& w) const { return apply(w, Direction::Inverse).word; }

 protected:
  virtual MapResult run(const Word& w, Direction d) const = 0;
};

/// tau-(sigma+s) -> rho-(sigma+s) through governing occurrences of sigma.
/// tau and rho are subwords with common largest letter s; sigma is a weakly
/// monotonic subword; g realizes tau ~ rho on strings.
std::unique_ptr<WordMap> make_governing_block_map(const Pattern& tau, const Pattern& rho,
                                                  const Pattern& sigma,
                                                  std::shared_ptr<const StringRewriter> g);

/// sigma-r(r+1) -> sigma-(r+1)r for a subword sigma with largest letter r.
std::unique_ptr<WordMap> make_letter_migration_map(const Pattern& sigma);

/// 134-2 -> 143-2, 124-3 -> 214-3, 142-3 -> 241-3 by staged swaps.
std::unique_ptr<WordMap> make_swap_map_134_2();
std::unique_ptr<WordMap> make_swap_map_124_3();
std::unique_ptr<WordMap> make_swap_map_142_3();

struct MapOptions {
  std::string tau = "12";
  std::string rho = "21";
  std::string sigma;  // defaults: "123" for tag 2.1, "11" for tag 2.5
  std::string rewriter = "reverse";
};

/// Tags: "2.1", "2.5", "3.3a", "3.3b", "3.3c".
std::unique_ptr<WordMap> make_map(std::string_view tag, const MapOptions& options = {});
const std::vector<std::string>& map_tags();

}  // namespace vincular
