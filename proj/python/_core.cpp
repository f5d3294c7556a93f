// Python bindings. Patterns are passed as dash-notation strings and words as
// digit strings or integer lists; exact coefficients come back as Python ints
// or fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <climits>

#include "vincular/bijections.hpp"
#include "vincular/enumeration.hpp"
#include "vincular/errors.hpp"
#include "vincular/genfun.hpp"
#include "vincular/matcher.hpp"
#include "vincular/pattern.hpp"
#include "vincular/suites.hpp"

namespace py = pybind11;
using namespace vincular;

namespace {

Word to_word(const py::object& w, int k) {
  if (py::isinstance<py::str>(w)) return Word::parse(w.cast<std::string>(), k);
  return Word(w.cast<std::vector<Letter>>(), k);
}

// Alphabet size large enough to accept any letter the caller supplies.
constexpr int kOpenAlphabet = INT_MAX;

std::vector<Letter> letters_of(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

py::object to_python(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  if (q.get_den() == 1) return py::int_(py::str(q.get_num().get_str()));
  return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::list coefficients(const TruncSeries& s) {
  py::list out;
  for (int n = 0; n <= s.order(); ++n) out.append(to_python(s.coefficient(n)));
  return out;
}

Refinement refinement_of(const std::string& name) {
  if (name == "none") return Refinement::None;
  if (name == "first-letter") return Refinement::FirstLetter;
  if (name == "content") return Refinement::Content;
  throw ValidationError("refinement must be none, first-letter or content, got '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Vincular pattern avoidance in k-ary words";

  auto base = py::register_exception<Error>(m, "VincularError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<GuardrailError>(m, "GuardrailError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<FormulaError>(m, "FormulaError", base.ptr());

  py::class_<Pattern>(m, "Pattern")
      .def(py::init([](const std::string& text) { return parse_pattern(text); }), py::arg("text"))
      .def_property_readonly("letters",
                             [](const Pattern& p) {
                               return std::vector<Letter>(p.letters().begin(), p.letters().end());
                             })
      .def_property_readonly("adjacencies", &Pattern::adjacencies)
      .def_property_readonly("type", &Pattern::type)
      .def_property_readonly("largest", &Pattern::largest)
      .def("is_subword", &Pattern::is_subword)
      .def("reverse", [](const Pattern& p) { return reverse(p); })
      .def("complement", [](const Pattern& p) { return complement(p); })
      .def("__str__", &format_pattern)
      .def("__repr__", [](const Pattern& p) { return "Pattern('" + format_pattern(p) + "')"; })
      .def("__len__", &Pattern::size)
      .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
      .def("__hash__", [](const Pattern& p) { return py::hash(py::str(format_pattern(p))); });

  m.def("parse_pattern", &parse_pattern, py::arg("text"));
  m.def("format_pattern", &format_pattern, py::arg("pattern"));
  m.def("all_patterns",
        [](const std::vector<int>& type) {
          std::vector<std::string> out;
          for (const auto& p : all_patterns(type)) out.push_back(format_pattern(p));
          return out;
        },
        py::arg("type"), "Every pattern of the given block type, in dash notation.");

  m.def("reduce",
        [](const py::object& w) { return letters_of(reduce(to_word(w, kOpenAlphabet))); },
        py::arg("word"));
  m.def("contains",
        [](const py::object& w, const std::string& p) {
          return contains(to_word(w, kOpenAlphabet), parse_pattern(p));
        },
        py::arg("word"), py::arg("pattern"));
  m.def("find_occurrences",
        [](const py::object& w, const std::string& p) {
          std::vector<std::vector<std::size_t>> out;
          for (const auto& o : find_occurrences(to_word(w, kOpenAlphabet), parse_pattern(p))) {
            out.push_back(o.indices);
          }
          return out;
        },
        py::arg("word"), py::arg("pattern"), "0-based index tuples in lexicographic order.");

  m.def("count_avoiders",
        [](const std::string& p, int n, int k, const py::object& prefix,
           const std::optional<std::vector<int>>& content) -> Count {
          const Pattern pat = parse_pattern(p);
          if (!prefix.is_none() && content) {
            throw ValidationError("prefix and content cannot be combined");
          }
          if (!prefix.is_none()) return count_avoiders_prefix(n, k, pat, to_word(prefix, k));
          if (content) return count_avoiders_by_content(n, k, pat, *content);
          return count_avoiders(n, k, pat);
        },
        py::arg("pattern"), py::arg("n"), py::arg("k"), py::arg("prefix") = py::none(),
        py::arg("content") = py::none());
  m.def("avoider_counts",
        [](const std::string& p, int n_max, int k) {
          return avoider_counts_upto(n_max, k, parse_pattern(p));
        },
        py::arg("pattern"), py::arg("n_max"), py::arg("k"), "a(0..n_max, k).");

  m.def("verify_equivalence",
        [](const std::string& p, const std::string& q, int n_max, int k_max,
           const std::string& refinement) {
          auto r = verify_equivalence(parse_pattern(p), parse_pattern(q), n_max, k_max,
                                      refinement_of(refinement));
          py::list mismatches;
          for (const auto& c : r.mismatches) {
            mismatches.append(py::dict(py::arg("n") = c.n, py::arg("k") = c.k,
                                       py::arg("cell") = c.cell, py::arg("left") = c.left,
                                       py::arg("right") = c.right));
          }
          return py::dict(py::arg("passed") = r.passed(),
                          py::arg("cells_compared") = r.cells_compared,
                          py::arg("mismatches") = mismatches, py::arg("summary") = r.summary());
        },
        py::arg("p"), py::arg("q"), py::arg("n_max"), py::arg("k_max"),
        py::arg("refinement") = "none");

  m.def("classify",
        [](const std::vector<int>& type, int n_max, int k_max) {
          const auto c = wilf_classify(all_patterns(type), n_max, k_max);
          std::vector<std::vector<std::string>> classes;
          for (const auto& cls : c.classes) {
            auto& names = classes.emplace_back();
            for (std::size_t i : cls) names.push_back(format_pattern(c.universe[i]));
          }
          return classes;
        },
        py::arg("type"), py::arg("n_max") = 8, py::arg("k_max") = 4,
        "Wilf classes of all patterns of the given type, by counts up to (n_max, k_max).");

  m.def("biject",
        [](const std::string& theorem, const py::object& word, int k, bool inverse,
           const std::string& sigma, const std::string& tau, const std::string& rho,
           const std::string& rewriter, bool unchecked) {
          MapOptions o;
          o.sigma = sigma;
          o.tau = tau;
          o.rho = rho;
          o.rewriter = rewriter;
          auto map = make_map(theorem, o);
          const Word w = to_word(word, k);
          const Direction d = inverse ? Direction::Inverse : Direction::Forward;
          const MapResult r = unchecked ? map->apply_unchecked(w, d) : map->apply(w, d);
          std::vector<std::string> stages;
          for (const auto& s : r.stages) stages.push_back(s.to_string());
          return py::dict(py::arg("source") = format_pattern(map->source()),
                          py::arg("target") = format_pattern(map->target()),
                          py::arg("output") = r.word.to_string(), py::arg("stages") = stages);
        },
        py::arg("theorem"), py::arg("word"), py::arg("k"), py::arg("inverse") = false,
        py::arg("sigma") = "", py::arg("tau") = "12", py::arg("rho") = "21",
        py::arg("rewriter") = "reverse", py::arg("unchecked") = false);

  m.def("gf",
        [](const std::string& theorem, int k, int order, const std::string& pattern) {
          const GFResult r = evaluate_gf(theorem, k, order, pattern);
          return py::dict(py::arg("pattern") = format_pattern(r.pattern), py::arg("k") = r.k,
                          py::arg("theorem") = r.theorem,
                          py::arg("coeffs") = coefficients(r.series),
                          py::arg("text") = r.series.to_string());
        },
        py::arg("theorem"), py::arg("k"), py::arg("order") = kDefaultOrder,
        py::arg("pattern") = "");
  m.def("verify_gf",
        [](const std::string& theorem, int k, int n_max, const std::string& pattern,
           const std::string& against) {
          GFResult r = evaluate_gf(theorem, k, n_max, pattern);
          if (!against.empty()) r.pattern = parse_pattern(against);
          const GFVerification v = verify_gf(r, n_max);
          return py::dict(py::arg("passed") = v.passed, py::arg("compared") = v.compared,
                          py::arg("first_bad") = v.first_bad, py::arg("summary") = v.summary());
        },
        py::arg("theorem"), py::arg("k"), py::arg("n_max"), py::arg("pattern") = "",
        py::arg("against") = "",
        "Compares coefficients through x^n_max with enumeration, optionally against another pattern.");
  m.def("gf_tags", [] {
    std::vector<std::string> out;
    for (const auto& e : gf_registry()) out.push_back(e.tag);
    return out;
  });

  m.def("run_suite",
        [](const std::string& suite) {
          py::list out;
          for (const auto& c : run_suite(suite)) {
            out.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed,
                                py::arg("detail") = c.detail));
          }
          return out;
        },
        py::arg("suite"));
  m.def("run_criterion",
        [](int criterion) {
          py::list out;
          for (const auto& c : criterion_checks(criterion)) {
            out.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed,
                                py::arg("detail") = c.detail));
          }
          return out;
        },
        py::arg("criterion"));
}
