#include "vincular/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "vincular/bijections.hpp"
#include "vincular/errors.hpp"
#include "vincular/genfun.hpp"
#include "vincular/matcher.hpp"

namespace vincular {
namespace {

// Calls f on every word of [k]^n in lexicographic order.
void for_each_word(int n, int k, const std::function<void(const Word&)>& f) {
  if (n == 0) {
    f(Word({}, k));
    return;
  }
  if (k == 0) return;
  std::vector<Letter> w(static_cast<std::size_t>(n), 1);
  while (true) {
    f(Word(w, k));
    std::size_t i = w.size();
    while (i > 0 && w[i - 1] == k) w[--i] = 1;
    if (i == 0) return;
    ++w[i - 1];
  }
}

Count power(int k, int n) {
  Count r = 1;
  for (int i = 0; i < n; ++i) r *= static_cast<Count>(k);
  return r;
}

std::vector<int> content_of(const Word& w) {
  std::vector<int> m(static_cast<std::size_t>(w.alphabet_size()), 0);
  for (Letter v : w.letters()) ++m[static_cast<std::size_t>(v - 1)];
  return m;
}

std::string positions_text(const Occurrence& o) {
  std::string s = "(";
  for (std::size_t i = 0; i < o.indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(o.indices[i] + 1);
  }
  return s + ")";
}

CheckResult check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

// Accumulates failures while a check runs, keeping the first few for the detail.
struct Failures {
  std::size_t count = 0;
  std::vector<std::string> shown;

  void add(std::string what) {
    if (shown.size() < 5) shown.push_back(std::move(what));
    ++count;
  }
  bool empty() const { return count == 0; }
  std::string text() const {
    std::string s = std::to_string(count) + " failure(s): ";
    for (std::size_t i = 0; i < shown.size(); ++i) s += (i ? "; " : "") + shown[i];
    return s;
  }
};

std::string range_text(int n_max, int k_max) {
  return "n<=" + std::to_string(n_max) + " k<=" + std::to_string(k_max);
}

// ---- criterion 1 -----------------------------------------------------------

CheckResult compare_trace(const std::string& name, const std::vector<Word>& stages,
                          const std::vector<std::string>& expected, std::string note) {
  std::ostringstream os;
  bool ok = stages.size() == expected.size();
  if (!ok) os << "expected " << expected.size() << " stages, got " << stages.size() << "; ";
  for (std::size_t i = 0; i < std::min(stages.size(), expected.size()); ++i) {
    if (stages[i].to_string() != expected[i]) {
      ok = false;
      os << "stage " << i + 1 << " is " << stages[i].to_string() << ", expected " << expected[i]
         << "; ";
    }
  }
  if (ok) os << "stages " << stages.size() << " match";
  if (!note.empty()) os << "; " << note;
  return check(name, ok, os.str());
}

// ---- criterion 2 -----------------------------------------------------------

struct MapInstance {
  std::string tag;
  MapOptions options;
};

std::vector<MapInstance> map_instances() {
  std::vector<MapInstance> out;
  for (const char* sigma : {"1", "12", "21", "123"}) out.push_back({"2.1", {"12", "21", sigma}});
  out.push_back({"2.1", {"112", "211", "1"}});
  out.push_back({"2.1", {"123", "321", "1"}});
  out.push_back({"2.1", {"213", "312", "1"}});
  for (const char* sigma : {"1", "11", "12", "21", "121"}) {
    MapOptions o;
    o.sigma = sigma;
    out.push_back({"2.5", o});
  }
  for (const char* tag : {"3.3a", "3.3b", "3.3c"}) out.push_back({tag, {}});
  return out;
}

CheckResult bijection_check(const MapInstance& in, const SuiteOptions& o) {
  auto map = make_map(in.tag, in.options);
  const std::string name = in.tag + " " + format_pattern(map->source()) + " -> " +
                           format_pattern(map->target());
  Failures fail;
  std::size_t words = 0;
  for (int k = 1; k <= o.k_max; ++k) {
    for (int n = 0; n <= o.n_max; ++n) {
      std::set<Word> image;
      for_each_word(n, k, [&](const Word& w) {
        if (contains(w, map->source())) return;
        ++words;
        const MapResult r = map->apply(w, Direction::Forward);
        const Word& f = r.word;
        if (contains(f, map->target())) fail.add(w.to_string() + " -> " + f.to_string() + " contains target");
        if (map->preserves_content() && content_of(f) != content_of(w)) {
          fail.add(w.to_string() + " -> " + f.to_string() + " changes content");
        }
        if ((in.tag == "2.5" || in.tag.starts_with("3.3")) &&
            r.stages.size() > static_cast<std::size_t>(k)) {
          fail.add(w.to_string() + " took " + std::to_string(r.stages.size()) + " stages");
        }
        if (!contains(f, map->target())) {
          const Word back = map->inverse(f);
          if (back != w) fail.add("inverse(" + f.to_string() + ") = " + back.to_string() + " != " + w.to_string());
        }
        if (!image.insert(f).second) fail.add("collision at " + f.to_string());
      });
      const Count target = count_avoiders(n, k, map->target(), o.guardrail);
      if (image.size() != target) {
        fail.add("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": image has " +
                 std::to_string(image.size()) + " words, target avoiders " + std::to_string(target));
      }
    }
  }
  std::string detail = fail.empty() ? std::to_string(words) + " avoiders mapped bijectively, " +
                                          range_text(o.n_max, o.k_max)
                                    : fail.text();
  if (fail.empty() && map->preserves_content()) detail += ", content preserved";
  return check(name, fail.empty(), detail);
}

// ---- criterion 3 -----------------------------------------------------------

// Compares a census with the listed groups. The expected partition joins the
// symmetry orbits with the listed groups; every other orbit should be a class
// of its own.
std::vector<CheckResult> census_checks(const std::string& type_name,
                                       const std::vector<PatternGroup>& groups,
                                       const WilfClassification& c) {
  const std::size_t N = c.universe.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < N; ++i) index[format_pattern(c.universe[i])] = i;

  std::vector<std::size_t> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& orbit : c.symmetry_orbits) {
    for (std::size_t i : orbit) parent[find(i)] = find(orbit.front());
  }
  for (const auto& g : groups) {
    for (const auto& name : g) parent[find(index.at(name))] = find(index.at(g.front()));
  }

  const std::string range = range_text(c.n_max, c.k_max);
  std::vector<CheckResult> out;

  Failures split;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      if (find(i) != find(j) || c.class_of(i) == c.class_of(j)) continue;
      auto w = c.witness(i, j);
      split.add(format_pattern(c.universe[i]) + " vs " + format_pattern(c.universe[j]) +
                " differ at n=" + std::to_string(w->first) + " k=" + std::to_string(w->second));
    }
  }
  out.push_back(check(type_name + " census " + range + ": listed equivalences hold",
                      split.empty(),
                      split.empty() ? "every listed group and symmetry orbit has one signature"
                                    : split.text()));

  // Distinct expected blocks merged by the census.
  std::vector<std::string> merged;
  for (const auto& cls : c.classes) {
    std::set<std::size_t> blocks;
    std::string names;
    for (std::size_t i : cls) {
      if (blocks.insert(find(i)).second) {
        names += (names.empty() ? "" : " = ") + format_pattern(c.universe[i]);
      }
    }
    if (blocks.size() > 1) merged.push_back("{" + names + "}");
  }
  std::ostringstream detail;
  std::size_t non_singleton = 0;
  for (const auto& cls : c.classes) non_singleton += cls.size() > 1;
  detail << c.classes.size() << " classes (" << non_singleton << " with several patterns)";
  if (!merged.empty()) {
    detail << "; no witness in range for " << merged.size() << " merge(s) of distinct classes:";
    for (const auto& m : merged) detail << " " << m;
  }
  if (merged.empty()) {
    detail << "; witnesses between listed groups:";
    for (std::size_t a = 0; a < groups.size(); ++a) {
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        auto w = c.witness(index.at(groups[a].front()), index.at(groups[b].front()));
        detail << " " << groups[a].front() << "/" << groups[b].front() << "@(" << w->first << ","
               << w->second << ")";
      }
    }
  }
  out.push_back(check(type_name + " census " + range + ": distinct classes separated",
                      merged.empty(), detail.str()));
  return out;
}

// ---- criterion 4 -----------------------------------------------------------

// Patterns t_1..t_l - t_{l+1} whose head rises weakly to a single peak at
// position j and then falls weakly, with t_j < t_{l+1}; paired with the swap
// of t_j and t_{l+1}.
std::vector<std::pair<Pattern, Pattern>> peak_instances(int ell) {
  std::vector<std::pair<Pattern, Pattern>> out;
  const std::vector<int> type = {ell, 1};
  for (const Pattern& p : all_patterns(type)) {
    auto t = p.letters();
    for (int j = 2; j <= ell - 1; ++j) {
      auto at = [&](int i) { return t[static_cast<std::size_t>(i - 1)]; };
      bool ok = at(j - 1) < at(j) && at(j) > at(j + 1) && at(j) < at(ell + 1);
      for (int i = 1; i + 1 <= j - 1; ++i) ok = ok && at(i) <= at(i + 1);
      for (int i = j + 1; i + 1 <= ell; ++i) ok = ok && at(i) >= at(i + 1);
      if (!ok) continue;
      std::vector<Letter> swapped(t.begin(), t.end());
      std::swap(swapped[static_cast<std::size_t>(j - 1)], swapped[static_cast<std::size_t>(ell)]);
      out.emplace_back(p, Pattern(swapped, p.adjacencies()));
    }
  }
  return out;
}

CheckResult equivalence_family(const std::string& name,
                               const std::vector<std::pair<Pattern, Pattern>>& pairs,
                               Refinement refinement, const SuiteOptions& o) {
  Failures fail;
  std::size_t cells = 0;
  for (const auto& [p, q] : pairs) {
    auto r = verify_equivalence(p, q, o.n_max, o.k_max, refinement, o.guardrail);
    cells += r.cells_compared;
    if (!r.passed()) fail.add(r.summary());
  }
  std::string detail = fail.empty() ? std::to_string(pairs.size()) + " pair(s), " +
                                          std::to_string(cells) + " cells agree, " +
                                          range_text(o.n_max, o.k_max)
                                    : fail.text();
  return check(name, fail.empty(), detail);
}

std::pair<Pattern, Pattern> pp(std::string_view a, std::string_view b) {
  return {parse_pattern(a), parse_pattern(b)};
}

// Pattern 1..(u-1)(u+1)..(r+1) - u.
Pattern gap_pattern(int r, int u) {
  std::vector<Letter> head;
  for (int v = 1; v <= r + 1; ++v) {
    if (v != u) head.push_back(v);
  }
  return Pattern::from_blocks({head, {u}});
}

// ---- criteria 5 to 7 -------------------------------------------------------

std::string series_mismatch(const TruncSeries& a, const TruncSeries& b, int order) {
  for (int n = 0; n <= order; ++n) {
    if (a.coefficient(n) != b.coefficient(n)) {
      return "x^" + std::to_string(n) + ": " + a.coefficient(n).get_str() + " vs " +
             b.coefficient(n).get_str();
    }
  }
  return {};
}

std::string poly_mismatch(const SeriesPoly& a, const SeriesPoly& b, int order) {
  const int d = std::max(a.degree(), b.degree());
  for (int j = 0; j <= d; ++j) {
    auto m = series_mismatch(a.coefficient(j), b.coefficient(j), order);
    if (!m.empty()) return "y^" + std::to_string(j) + " " + m;
  }
  return {};
}

std::vector<Pattern> census_universe() {
  std::vector<Pattern> u;
  for (const std::vector<int>& type : {std::vector<int>{3, 1}, std::vector<int>{2, 2}}) {
    auto ps = all_patterns(type);
    u.insert(u.end(), ps.begin(), ps.end());
  }
  return u;
}

const std::vector<std::string>& closed_form_patterns() {
  static const std::vector<std::string> names = {"111-2", "112-3", "212-3", "123-4", "213-4"};
  return names;
}

int closed_form_min_k(const std::string& name) {
  if (name == "111-2") return 1;
  if (name == "112-3" || name == "212-3") return 2;
  return 3;
}

}  // namespace

const std::vector<PatternGroup>& listed_groups_3_1() {
  static const std::vector<PatternGroup> g = {
      {"112-1", "122-1", "122-2"},
      {"112-3", "122-3", "211-3", "221-3"},
      {"113-2", "133-2"},
      {"131-2", "121-3", "212-3"},
      {"123-1", "123-3", "123-2"},
      {"123-4", "321-4"},
      {"124-3", "134-2", "143-2", "214-3"},
      {"132-1", "132-2"},
      {"213-4", "231-4", "312-4", "132-4", "142-3", "241-3"},
      {"213-1", "213-2"},
  };
  return g;
}

const std::vector<PatternGroup>& listed_groups_2_2() {
  static const std::vector<PatternGroup> g = {
      {"11-12", "11-21"},
      {"11-23", "11-32"},
      {"12-13", "13-12"},
      {"12-34", "12-43", "21-43", "21-34"},
      {"12-32", "12-23", "21-32", "21-23"},
      {"13-24", "24-13"},
      {"14-23", "23-14"},
  };
  return g;
}

std::vector<CheckResult> worked_example_checks() {
  std::vector<CheckResult> out;

  {
    auto map = make_map("2.1");
    const Word w = Word::parse("43176783245633254572134521358434", 8);
    const std::string expected = "13476782345623354571234512358434";
    const Word f = map->forward(w);
    const bool ok = f.to_string() == expected;
    out.push_back(check("2.1 example (n=32, k=8)", ok,
                        ok ? "output " + expected + " matches; image avoids " +
                                 format_pattern(map->target())
                           : "got " + f.to_string() + ", expected " + expected));
  }
  {
    MapOptions opts;
    opts.sigma = "11";
    auto map = make_map("2.5", opts);
    const Word w = Word::parse("215562213422116535443543654211", 6);
    const MapResult r = map->apply(w, Direction::Forward);
    out.push_back(compare_trace("2.5 example (n=30, k=6), stages pi_1..pi_4", r.stages,
                                {"215562213422111165354435436542", "215562212234111126535443543654",
                                 "215562212234111126535443453465", "215562212234111125635443453456"},
                                ""));
  }
  {
    auto map = make_map("3.3a");
    const Word w = Word::parse("3656264116356143254163423", 6);
    auto occ = find_occurrences(w, map->source());
    std::string note;
    if (!occ.empty()) {
      note = "input contains " + format_pattern(map->source()) + " " + std::to_string(occ.size()) +
             " time(s), first at " + positions_text(occ.front()) +
             ", so the trace is replayed without the domain precondition";
    }
    const MapResult r = map->apply_unchecked(w, Direction::Forward);
    auto c = compare_trace("3.3a example (n=25, k=6), stages f_1..f_3", r.stages,
                           {"3566246113566143254136423", "3566246113566143245136423",
                            "3566246113566134245136423"},
                           note);
    if (contains(r.word, map->target())) {
      c.passed = false;
      c.detail += "; image contains " + format_pattern(map->target());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CheckResult> bijection_property_checks(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  for (const auto& in : map_instances()) out.push_back(bijection_check(in, o));
  const std::vector<std::pair<std::string, std::string>> rewrites = {
      {"12", "21"}, {"112", "211"}, {"123", "321"}, {"213", "312"}};
  for (const auto& [tau, rho] : rewrites) {
    auto r = check_rewriter_contract(*reversal_rewriter(), parse_pattern(tau), parse_pattern(rho));
    out.push_back(check("reversal realizes " + tau + " ~ " + rho, r.passed, r.detail));
  }
  return out;
}

std::vector<CheckResult> classification_checks(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const std::vector<std::pair<std::vector<int>, const std::vector<PatternGroup>*>> types = {
      {{3, 1}, &listed_groups_3_1()}, {{2, 2}, &listed_groups_2_2()}};
  for (const auto& [type, groups] : types) {
    const std::string name =
        "(" + std::to_string(type[0]) + "," + std::to_string(type[1]) + ")";
    const auto universe = all_patterns(type);
    auto main = wilf_classify(universe, o.n_max, o.k_max, o.guardrail);
    for (auto& c : census_checks(name, *groups, main)) out.push_back(std::move(c));
    if (o.census_n_extended >= o.n_max && o.census_k_extended >= o.k_max &&
        o.census_n_extended + o.census_k_extended > o.n_max + o.k_max) {
      auto wide = wilf_classify(universe, o.census_n_extended, o.census_k_extended, o.guardrail);
      for (auto& c : census_checks(name, *groups, wide)) {
        c.name += " (extended range, beyond the required one)";
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<CheckResult> equivalence_checks(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  for (int ell : {3, 4}) {
    out.push_back(equivalence_family(
        "single-peak head swap, head length " + std::to_string(ell) + ", first-letter refined",
        peak_instances(ell), Refinement::FirstLetter, o));
  }
  for (int i : {2, 3}) {
    std::vector<std::pair<Pattern, Pattern>> pairs;
    std::vector<Letter> head(static_cast<std::size_t>(i));
    std::iota(head.begin(), head.end(), 1);
    for (int c = 1; c <= i; ++c) {
      for (int d = c + 1; d <= i; ++d) {
        pairs.emplace_back(Pattern::from_blocks({head, {c}}), Pattern::from_blocks({head, {d}}));
      }
    }
    out.push_back(equivalence_family("12..i-c ~ 12..i-d, i=" + std::to_string(i), pairs,
                                     Refinement::None, o));
  }
  {
    std::vector<std::pair<Pattern, Pattern>> pairs;
    for (int u = 2; u <= 3; ++u) {
      for (int v = u + 1; v <= 3; ++v) pairs.emplace_back(gap_pattern(3, u), gap_pattern(3, v));
    }
    out.push_back(equivalence_family("gap patterns, r=3", pairs, Refinement::None, o));
  }
  for (int i : {2, 3}) {
    const std::string ones(static_cast<std::size_t>(i), '1');
    const std::string threes(static_cast<std::size_t>(i), '3');
    const std::string twos(static_cast<std::size_t>(i), '2');
    out.push_back(equivalence_family("1^i3-2 ~ 13^i-2, i=" + std::to_string(i),
                                     {pp(ones + "3-2", "1" + threes + "-2")}, Refinement::None, o));
    out.push_back(equivalence_family("1^i2-1 ~ 12^i-1, i=" + std::to_string(i),
                                     {pp(ones + "2-1", "1" + twos + "-1")}, Refinement::None, o));
  }
  out.push_back(equivalence_family("213-1 ~ 213-2 and 122-1 ~ 122-2",
                                   {pp("213-1", "213-2"), pp("122-1", "122-2")}, Refinement::None, o));
  out.push_back(equivalence_family("132-1 ~ 132-2", {pp("132-1", "132-2")}, Refinement::None, o));
  return out;
}

std::vector<CheckResult> gf_exactness_checks(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const int top = std::min(o.order, o.n_max + 2);
  auto verify_range = [&](const std::string& name, int k_lo, int k_hi,
                          const std::function<GFResult(int)>& make) {
    Failures fail;
    int coeffs = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
      try {
        const GFResult r = make(k);
        auto v = verify_gf(r, top, o.guardrail);
        coeffs += v.compared;
        if (!v.passed) fail.add("k=" + std::to_string(k) + " " + v.summary());
      } catch (const Error& e) {
        fail.add("k=" + std::to_string(k) + " " + e.what());
      }
    }
    out.push_back(check(name, fail.empty(),
                        fail.empty() ? std::to_string(coeffs) + " coefficients x^0..x^" +
                                           std::to_string(top) + " equal enumeration, k=" +
                                           std::to_string(k_lo) + ".." + std::to_string(k_hi)
                                     : fail.text()));
  };

  for (const auto& e : gf_registry()) {
    if (e.pattern.empty()) continue;
    verify_range(e.tag + " " + e.pattern, e.min_k, o.k_max,
                 [&](int k) { return evaluate_gf(e.tag, k, o.order); });
  }
  verify_range("4.5 series counts 133-2", 0, o.k_max, [&](int k) {
    GFResult r = evaluate_gf("4.5", k, o.order);
    r.pattern = parse_pattern("133-2");
    return r;
  });
  verify_range("4.9 series counts 132-2", 0, o.k_max, [&](int k) {
    GFResult r = evaluate_gf("4.9", k, o.order);
    r.pattern = parse_pattern("132-2");
    return r;
  });
  for (const auto& name : closed_form_patterns()) {
    verify_range("closed form " + name, closed_form_min_k(name), o.k_max,
                 [&](int k) { return closed_form_gf(name, k, o.order); });
  }

  // Product route against the closed forms, and the transfer matrix against enumeration.
  {
    Failures fail;
    int compared = 0;
    for (const auto& name : closed_form_patterns()) {
      const std::string head = name.substr(0, 3);
      const Pattern tau = parse_pattern(head);
      for (int k = closed_form_min_k(name); k <= o.series_k_max; ++k) {
        auto a = product_gf(tau, k, o.order).series;
        auto b = closed_form_gf(name, k, o.order).series;
        auto m = series_mismatch(a, b, o.order);
        ++compared;
        if (!m.empty()) fail.add(name + " k=" + std::to_string(k) + " " + m);
      }
    }
    out.push_back(check("product formula equals the closed forms", fail.empty(),
                        fail.empty() ? std::to_string(compared) + " (pattern, k) pairs agree, k<=" +
                                           std::to_string(o.series_k_max) + ", order " +
                                           std::to_string(o.order)
                                     : fail.text()));
  }
  {
    Failures fail;
    int compared = 0;
    for (const auto& letters : reduced_words(3)) {
      const Pattern tau = Pattern::subword(letters);
      for (int k = 0; k <= o.k_max; ++k) {
        auto s = subword_gf(tau, k, top);
        auto counts = avoider_counts_upto(top, k, tau, o.guardrail);
        for (int n = 0; n <= top; ++n) {
          ++compared;
          if (s.coefficient(n) != Rational(static_cast<unsigned long>(counts[static_cast<std::size_t>(n)]))) {
            fail.add(format_pattern(tau) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
          }
        }
      }
    }
    out.push_back(check("transfer-matrix subword series equal enumeration", fail.empty(),
                        fail.empty() ? std::to_string(compared) +
                                           " coefficients for all 13 length-3 subwords"
                                     : fail.text()));
  }
  {
    // The product route is built on the transfer-matrix series; check it
    // against enumeration where the closed forms have no display.
    Failures fail;
    int compared = 0;
    for (const auto& letters : reduced_words(3)) {
      const Pattern tau = Pattern::subword(letters);
      for (int k = tau.largest(); k <= o.k_max; ++k) {
        auto v = verify_gf(product_gf(tau, k, o.order), top, o.guardrail);
        compared += v.compared;
        if (!v.passed) fail.add(format_pattern(tau) + " k=" + std::to_string(k) + " " + v.summary());
      }
    }
    out.push_back(check("product formula equals enumeration for every length-3 subword",
                        fail.empty(),
                        fail.empty() ? std::to_string(compared) + " coefficients agree"
                                     : fail.text()));
  }
  return out;
}

std::vector<CheckResult> dual_route_checks(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const std::string range = "k<=" + std::to_string(o.series_k_max) + ", order " +
                            std::to_string(o.order);
  {
    Failures fail;
    for (int k = 1; k <= o.series_k_max; ++k) {
      auto m = series_mismatch(w_111_1_closed(k, o.order), w_111_1_recurrence(k, o.order), o.order);
      if (!m.empty()) fail.add("k=" + std::to_string(k) + " " + m);
    }
    out.push_back(check("4.2 closed sum equals recurrence", fail.empty(),
                        fail.empty() ? "agree, " + range : fail.text()));
  }
  {
    Failures fail;
    for (int i = 0; i < o.series_k_max; ++i) {
      auto m = poly_mismatch(array_113_2(i, o.order), array_113_2_chebyshev(i, o.order), o.order);
      if (!m.empty()) fail.add("i=" + std::to_string(i) + " " + m);
    }
    out.push_back(check("4.5 Chebyshev form equals A_i(y) recurrence", fail.empty(),
                        fail.empty() ? "A_0..A_" + std::to_string(o.series_k_max - 1) +
                                           " agree coefficientwise, " + range
                                     : fail.text()));
  }
  {
    Failures fail;
    for (int i = 0; i < o.series_k_max; ++i) {
      auto m = poly_mismatch(array_132_3(i, o.order), array_132_3_symmetric(i, o.order), o.order);
      if (!m.empty()) fail.add("i=" + std::to_string(i) + " " + m);
    }
    out.push_back(check("4.8 elementary-symmetric form equals A_i(y) recurrence", fail.empty(),
                        fail.empty() ? "A_0..A_" + std::to_string(o.series_k_max - 1) +
                                           " agree coefficientwise (signed sum), " + range
                                     : fail.text()));
  }
  return out;
}

std::vector<CheckResult> invariant_checks(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const auto universe = census_universe();
  const std::string range = range_text(o.n_max, o.k_max);

  std::map<Pattern, std::vector<std::vector<Count>>> cache;
  auto counts = [&](const Pattern& p) -> const std::vector<std::vector<Count>>& {
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<Count>> t;
    for (int k = 0; k <= o.k_max; ++k) t.push_back(avoider_counts_upto(o.n_max, k, p, o.guardrail));
    return cache.emplace(p, std::move(t)).first->second;
  };

  {
    Failures fail;
    for (const Pattern& p : universe) {
      const auto& base = counts(p);
      for (const Pattern& q : {reverse(p), complement(p), reverse(complement(p))}) {
        if (counts(q) != base) fail.add(format_pattern(p) + " vs " + format_pattern(q));
      }
    }
    out.push_back(check("symmetry transport (r, c, rc)", fail.empty(),
                        fail.empty() ? std::to_string(universe.size()) +
                                           " (3,1) and (2,2) patterns, " + range
                                     : fail.text()));
  }
  {
    Failures fail;
    for (const Pattern& p : universe) {
      const auto& t = counts(p);
      for (int k = 0; k <= o.k_max; ++k) {
        for (int n = 0; n < static_cast<int>(p.size()) && n <= o.n_max; ++n) {
          if (t[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] != power(k, n)) {
            fail.add(format_pattern(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
          }
        }
        for (int n = 0; n < o.n_max; ++n) {
          const Count a = t[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
          const Count b = t[static_cast<std::size_t>(k)][static_cast<std::size_t>(n) + 1];
          if (b > static_cast<Count>(k) * a) fail.add(format_pattern(p) + " growth at n=" + std::to_string(n));
          if (k < o.k_max && a > t[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(n)]) {
            fail.add(format_pattern(p) + " not monotone in k at n=" + std::to_string(n));
          }
        }
      }
    }
    out.push_back(check("short-word law a(n,k)=k^n for n<4, monotonicity", fail.empty(),
                        fail.empty() ? "all (3,1) and (2,2) patterns, k<=" + std::to_string(o.k_max)
                                     : fail.text()));
  }
  {
    Failures fail;
    const int n_ref = std::min(o.n_max, 6);
    std::size_t sums = 0;
    for (const Pattern& p : universe) {
      for (int k = 1; k <= o.k_max; ++k) {
        auto first = avoider_counts_by_first_letter(n_ref, k, p, o.guardrail);
        for (int n = 1; n <= n_ref; ++n) {
          const Count total = counts(p)[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
          Count by_first = 0;
          Count by_prefix = 0;
          for (int a = 1; a <= k; ++a) {
            by_first += first[static_cast<std::size_t>(n)][static_cast<std::size_t>(a - 1)];
            by_prefix += count_avoiders_prefix(n, k, p, Word({a}, k), o.guardrail);
          }
          Count by_content = 0;
          for (const auto& [m, c] : avoider_counts_by_content(n, k, p, o.guardrail)) by_content += c;
          sums += 3;
          if (by_first != total || by_prefix != total || by_content != total) {
            fail.add(format_pattern(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
          }
        }
      }
    }
    out.push_back(check("refinement sums (first letter, prefix, content)", fail.empty(),
                        fail.empty() ? std::to_string(sums) + " sums equal a(n,k), n<=" +
                                           std::to_string(n_ref) + " k<=" + std::to_string(o.k_max)
                                     : fail.text()));
  }
  {
    Failures fail;
    std::size_t series = 0;
    auto inspect = [&](const std::string& what, const std::function<TruncSeries()>& make) {
      try {
        require_counting_series(make(), what);
        ++series;
      } catch (const Error& e) {
        fail.add(e.what());
      }
    };
    const int order = std::max(o.order, kDefaultOrder);
    for (const auto& e : gf_registry()) {
      if (e.pattern.empty()) continue;
      for (int k = e.min_k; k <= o.series_k_max; ++k) {
        inspect(e.tag + " k=" + std::to_string(k), [&] { return evaluate_gf(e.tag, k, order).series; });
      }
    }
    for (const auto& name : closed_form_patterns()) {
      for (int k = closed_form_min_k(name); k <= o.series_k_max; ++k) {
        inspect(name + " k=" + std::to_string(k), [&] { return closed_form_gf(name, k, order).series; });
      }
    }
    for (const auto& letters : reduced_words(3)) {
      const Pattern tau = Pattern::subword(letters);
      for (int k = tau.largest(); k <= o.series_k_max; ++k) {
        inspect("4.1 " + format_pattern(tau) + " k=" + std::to_string(k),
                [&] { return product_gf(tau, k, order).series; });
      }
    }
    for (const char* name : {"112-1", "112-2", "113-2", "121-2", "132-1", "132-3", "231-3"}) {
      const int lo = std::string(name) == "231-3" ? 3 : (std::string(name) == "112-2" ? 2 : 1);
      for (int k = lo; k <= o.k_max; ++k) {
        for (int a = 1; a <= k; ++a) {
          inspect(std::string(name) + " first letter " + std::to_string(a) + " k=" + std::to_string(k),
                  [&] { return first_letter_gf(name, k, a, order); });
        }
      }
    }
    out.push_back(check("integrality and non-negativity of emitted series", fail.empty(),
                        fail.empty() ? std::to_string(series) + " series through x^" +
                                           std::to_string(order)
                                     : fail.text()));
  }
  return out;
}

std::vector<CheckResult> criterion_checks(int criterion, const SuiteOptions& o) {
  switch (criterion) {
    case 1: return worked_example_checks();
    case 2: return bijection_property_checks(o);
    case 3: return classification_checks(o);
    case 4: return equivalence_checks(o);
    case 5: return gf_exactness_checks(o);
    case 6: return dual_route_checks(o);
    case 7: return invariant_checks(o);
    default: throw ValidationError("criterion must be 1..7, got " + std::to_string(criterion));
  }
}

std::string criterion_title(int criterion) {
  switch (criterion) {
    case 1: return "worked-example fidelity";
    case 2: return "bijection properties";
    case 3: return "classification census";
    case 4: return "non-constructive equivalences";
    case 5: return "generating-function exactness";
    case 6: return "dual-route identities";
    case 7: return "invariant suites";
    default: throw ValidationError("criterion must be 1..7, got " + std::to_string(criterion));
  }
}

std::vector<int> suite_criteria(std::string_view suite) {
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7};
  if (suite == "bijections") return {1, 2};
  if (suite == "classification") return {3, 4};
  if (suite == "genfun") return {5, 6};
  if (suite == "invariants") return {7};
  throw ValidationError("unknown suite '" + std::string(suite) +
                        "'; expected all, bijections, classification, genfun or invariants");
}

std::vector<CheckResult> run_suite(std::string_view suite, const SuiteOptions& o) {
  std::vector<CheckResult> out;
  for (int c : suite_criteria(suite)) {
    for (auto& r : criterion_checks(c, o)) out.push_back(std::move(r));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace vincular
