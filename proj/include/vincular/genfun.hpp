#pragma once

// Generating functions W_p(x;k) = sum_n a_p(n,k) x^n for fixed k.
//
// Every entry point takes the requested truncation order N and returns a
// series known exactly through x^N. Formulas are evaluated at a slightly
// higher internal order so the quotients by denominators with zero constant
// term never eat into the requested coefficients.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vincular/enumeration.hpp"
#include "vincular/pattern.hpp"
#include "vincular/series.hpp"

namespace vincular {

inline constexpr int kDefaultOrder = 12;

struct GFResult {
  Pattern pattern;
  int k = 0;
  TruncSeries series;
  std::string theorem;  // registry tag
};

/// {"pattern":"113-2","k":4,"theorem":"4.5","coeffs":["1","4",...]}.
std::string to_json(const GFResult& r);

/// Throws FormulaError unless every coefficient is a non-negative integer.
void require_counting_series(const TruncSeries& s, const std::string& context);

// ---- Subword inputs and the product formula --------------------------------

/// Avoiders of a consecutive pattern, by a transfer matrix on the last |tau|-1 letters.
TruncSeries subword_gf(const Pattern& tau, int k, int order = kDefaultOrder);

/// W for tau-r (tau a subword with largest letter r-1) as
/// 1 / ((1-(r-1)x) prod_{j=r-1}^{k-1} (1 - x W_tau(x;j))). Needs k >= r-1.
GFResult product_gf(const Pattern& tau, int k, int order = kDefaultOrder);

/// The five closed forms for 111-2, 112-3, 212-3, 123-4, 213-4, built from
/// closed subword series. 212-3 uses the corrected inner series.
GFResult closed_form_gf(std::string_view pattern, int k, int order = kDefaultOrder);
/// The 212-3 display with inner sum over 1/(1-ix^2), i = 0..j, kept for comparison.
TruncSeries closed_form_212_3_as_printed(int k, int order = kDefaultOrder);

// ---- Patterns of length four -----------------------------------------------

/// 111-1, closed sum. Also runs the recurrence and throws FormulaError if they differ.
TruncSeries w_111_1(int k, int order = kDefaultOrder);
TruncSeries w_111_1_closed(int k, int order = kDefaultOrder);
/// W(k) = (1+x(1+x) + k x^3 W(k-1)) / (1-(k-1)x(1+x)), W(0) = 1.
TruncSeries w_111_1_recurrence(int k, int order = kDefaultOrder);

TruncSeries w_112_1(int k, int order = kDefaultOrder);
TruncSeries w_112_2(int k, int order = kDefaultOrder);
TruncSeries w_113_2(int k, int order = kDefaultOrder);
TruncSeries w_121_1(int k, int order = kDefaultOrder);
TruncSeries w_121_2(int k, int order = kDefaultOrder);
TruncSeries w_132_3(int k, int order = kDefaultOrder);
TruncSeries w_132_1(int k, int order = kDefaultOrder);
/// 231-3 from the first-letter system; public domain k >= 3.
TruncSeries w_231_3(int k, int order = kDefaultOrder);
/// The published 231-3 array, evaluated literally. Throws FormulaError naming
/// (k, i, j) at a non-removable zero denominator.
TruncSeries w_231_3_as_printed(int k, int order = kDefaultOrder);

// ---- Arrays A_i(y) = sum_j a_{i,j} y^j ------------------------------------

/// 113-2: A_{i+1} = (1+y)A_i - (x^2(1-y)+y)A_{i-1}, A_0 = A_1 = x.
SeriesPoly array_113_2(int i, int order = kDefaultOrder);
/// 113-2 through T_i and U_i: x/(1+y) (2y D^{i/2}T_i(u/2sqrt D) + (1-y) D^{i/2}U_i(u/2sqrt D))
/// with u = 1+y, D = x^2(1-y)+y, expanded from the Chebyshev coefficients.
SeriesPoly array_113_2_chebyshev(int i, int order = kDefaultOrder);

/// 132-3: A_{i+1} = (1-ix^2)A_i + ix^2 y A_{i-1}, A_0 = A_1 = x.
SeriesPoly array_132_3(int i, int order = kDefaultOrder);
/// 132-3: a_{i,j} = x sum_d (-1)^d C(i,d) e_{i-j}((d-1)x^2-1, ..., -1).
SeriesPoly array_132_3_symmetric(int i, int order = kDefaultOrder);
/// The same sum without the (-1)^d sign.
SeriesPoly array_132_3_as_printed(int i, int order = kDefaultOrder);

/// W(x;k|a), avoiders whose first letter is a (1 <= a <= k), for patterns
/// assembled from a first-letter decomposition: 112-1, 112-2 (k >= 2),
/// 113-2, 121-2, 132-1, 132-3, 231-3.
TruncSeries first_letter_gf(std::string_view pattern, int k, int a, int order = kDefaultOrder);

// ---- Registry and verification ---------------------------------------------

struct GFEntry {
  std::string tag;
  std::string pattern;  // empty when the pattern is an argument ("4.1", "ex4.1")
  int min_k = 0;
  std::string description;
};

const std::vector<GFEntry>& gf_registry();

/// Evaluates a registry entry. `pattern` is the subword for "4.1" and one of
/// the five closed-form patterns for "ex4.1"; otherwise it must be empty or
/// equal to the entry's pattern. Throws DomainError for k below the entry's
/// range and ValidationError for an unknown tag.
GFResult evaluate_gf(std::string_view tag, int k, int order = kDefaultOrder,
                     std::string_view pattern = {});

struct GFVerification {
  bool passed = true;
  int compared = 0;
  int first_bad = -1;
  Count expected = 0;
  Rational got;

  std::string summary() const;
};

/// Compares coefficient(n) with count_avoiders(n, k, pattern) for n <= n_max.
GFVerification verify_gf(const GFResult& r, int n_max,
                         const Guardrail& g = Guardrail::from_env());

}  // namespace vincular
