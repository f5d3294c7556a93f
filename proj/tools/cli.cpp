#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <map>
#include <sstream>

#include "vincular/bijections.hpp"
#include "vincular/enumeration.hpp"
#include "vincular/errors.hpp"
#include "vincular/genfun.hpp"
#include "vincular/matcher.hpp"
#include "vincular/suites.hpp"

namespace vincular::cli {
namespace {

using nlohmann::json;

struct Globals {
  std::string output = "text";
  unsigned long long guardrail = 0;  // 0: default or $VINCULAR_GUARDRAIL

  bool json_mode() const { return output == "json"; }
  Guardrail cap() const {
    Guardrail g = Guardrail::from_env();
    if (guardrail > 0) g.max_cell = guardrail;
    return g;
  }
};

struct CountArgs {
  std::string pattern;
  int n = 0;
  int k = 0;
  std::string prefix;
  std::vector<int> content;
};

struct ClassifyArgs {
  std::vector<int> type;
  int n_max = 8;
  int k_max = 4;
};

struct BijectArgs {
  std::string theorem;
  std::string word;
  int k = 0;
  MapOptions options;
  bool trace = false;
  bool inverse = false;
  bool unchecked = false;
};

struct GfArgs {
  std::string theorem;
  int k = 0;
  int order = kDefaultOrder;
  std::string subword;
  std::string pattern;
  bool verify = false;
  int verify_n = -1;
  std::string against;
  bool list = false;
};

struct VerifyArgs {
  std::string suite = "all";
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_count(const CountArgs& a, const Globals& g, std::ostream& out) {
  const Pattern p = parse_pattern(a.pattern);
  const Guardrail cap = g.cap();
  if (!a.prefix.empty() && !a.content.empty()) {
    throw ValidationError("--prefix and --content cannot be combined");
  }
  Count c = 0;
  json j = {{"pattern", format_pattern(p)}, {"n", a.n}, {"k", a.k}};
  if (!a.prefix.empty()) {
    const Word prefix = Word::parse(a.prefix, a.k);
    c = count_avoiders_prefix(a.n, a.k, p, prefix, cap);
    j["prefix"] = prefix.to_string();
  } else if (!a.content.empty()) {
    c = count_avoiders_by_content(a.n, a.k, p, a.content, cap);
    j["content"] = a.content;
  } else {
    c = count_avoiders(a.n, a.k, p, cap);
  }
  j["count"] = c;
  if (g.json_mode()) {
    out << j.dump() << "\n";
  } else {
    out << c << "\n";
  }
  return kOk;
}

int cmd_classify(const ClassifyArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const auto universe = all_patterns(a.type);
  const auto c = wilf_classify(universe, a.n_max, a.k_max, g.cap());
  // Internal consistency: symmetric patterns must share a class.
  bool consistent = true;
  for (const auto& orbit : c.symmetry_orbits) {
    for (std::size_t i : orbit) consistent = consistent && c.class_of(i) == c.class_of(orbit.front());
  }
  if (g.json_mode()) {
    out << to_json(c) << "\n";
  } else {
    std::size_t non_singleton = 0;
    for (const auto& cls : c.classes) non_singleton += cls.size() > 1;
    out << universe.size() << " patterns of type (" << join(a.type) << "), n<=" << a.n_max
        << " k<=" << a.k_max << ": " << c.classes.size() << " classes, " << non_singleton
        << " with several patterns\n";
    for (std::size_t ci = 0; ci < c.classes.size(); ++ci) {
      const auto& cls = c.classes[ci];
      std::map<std::size_t, std::vector<std::string>> orbits;
      for (std::size_t i : cls) orbits[c.orbit_of(i)].push_back(format_pattern(c.universe[i]));
      out << (cls.size() == 1 ? "singleton" : "class") << " " << ci + 1 << ":";
      for (const auto& [_, names] : orbits) {
        out << " {";
        for (std::size_t t = 0; t < names.size(); ++t) out << (t ? " " : "") << names[t];
        out << "}";
      }
      out << "\n";
    }
  }
  if (!consistent) {
    err << "error: a symmetry orbit is split across classes\n";
    return kSuiteFailure;
  }
  return kOk;
}

int cmd_biject(const BijectArgs& a, const Globals& g, std::ostream& out) {
  auto map = make_map(a.theorem, a.options);
  const Word w = Word::parse(a.word, a.k);
  const Direction d = a.inverse ? Direction::Inverse : Direction::Forward;
  const MapResult r = a.unchecked ? map->apply_unchecked(w, d) : map->apply(w, d);
  const std::string stem = a.inverse ? "stage_" : (a.theorem.starts_with("3.3") ? "f_" : "pi_");
  if (g.json_mode()) {
    json stages = json::array();
    for (const Word& s : r.stages) stages.push_back(s.to_string());
    json j = {{"theorem", a.theorem},
              {"source", format_pattern(a.inverse ? map->target() : map->source())},
              {"target", format_pattern(a.inverse ? map->source() : map->target())},
              {"direction", a.inverse ? "inverse" : "forward"},
              {"k", a.k},
              {"input", w.to_string()},
              {"output", r.word.to_string()}};
    if (a.trace) j["stages"] = std::move(stages);
    out << j.dump() << "\n";
  } else {
    if (a.trace) {
      for (std::size_t i = 0; i < r.stages.size(); ++i) {
        out << stem << i + 1 << " = " << r.stages[i].to_string() << "\n";
      }
    }
    out << r.word.to_string() << "\n";
  }
  return kOk;
}

// Largest n <= order whose cell k^n fits under the cap.
int default_verify_n(int k, int order, const Guardrail& cap) {
  if (k <= 1) return order;
  int n = 0;
  unsigned long long cell = 1;
  while (n < order && cell <= cap.max_cell / static_cast<unsigned long long>(k)) {
    cell *= static_cast<unsigned long long>(k);
    ++n;
  }
  return n;
}

int cmd_gf(const GfArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  if (a.list) {
    for (const auto& e : gf_registry()) {
      if (g.json_mode()) {
        out << json{{"theorem", e.tag}, {"pattern", e.pattern}, {"min_k", e.min_k},
                    {"description", e.description}}
                   .dump()
            << "\n";
      } else {
        out << e.tag << "\t" << (e.pattern.empty() ? "-" : e.pattern) << "\tk>=" << e.min_k << "\t"
            << e.description << "\n";
      }
    }
    return kOk;
  }
  if (a.theorem.empty()) throw ValidationError("--theorem is required (see gf --list)");
  if (!a.subword.empty() && !a.pattern.empty()) {
    throw ValidationError("--subword and --pattern cannot be combined");
  }
  const std::string arg = !a.subword.empty() ? a.subword : a.pattern;
  if (!a.subword.empty() && a.theorem != "4.1") {
    throw ValidationError("--subword only applies to tag 4.1");
  }
  const GFResult r = evaluate_gf(a.theorem, a.k, a.order, arg);
  GFResult checked = r;
  if (!a.against.empty()) {
    if (!a.verify) throw ValidationError("--against needs --verify");
    checked.pattern = parse_pattern(a.against);
  }

  std::optional<GFVerification> v;
  int n_max = 0;
  if (a.verify) {
    const Guardrail cap = g.cap();
    n_max = a.verify_n >= 0 ? a.verify_n : default_verify_n(a.k, a.order, cap);
    v = verify_gf(checked, n_max, cap);
  }
  if (g.json_mode()) {
    json j = json::parse(to_json(r));
    if (v) {
      j["verify"] = {{"passed", v->passed},
                     {"compared", v->compared},
                     {"against", format_pattern(checked.pattern)}};
      if (!v->passed) {
        j["verify"]["first_bad"] = v->first_bad;
        j["verify"]["expected"] = std::to_string(v->expected);
        j["verify"]["got"] = v->got.get_str();
      }
    }
    out << j.dump() << "\n";
  } else {
    out << "W_{" << format_pattern(r.pattern) << "}(x;" << r.k << ") [" << r.theorem
        << "] = " << r.series.to_string() << "\n";
    if (v) {
      out << "verify " << format_pattern(checked.pattern) << " n<=" << n_max << ": "
          << v->summary() << "\n";
    }
  }
  if (v && !v->passed) {
    err << "error: coefficient mismatch at n=" << v->first_bad << "\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  SuiteOptions o;
  o.guardrail = g.cap();
  std::size_t failed = 0;
  std::size_t total = 0;
  for (int c : suite_criteria(a.suite)) {
    const auto checks = criterion_checks(c, o);
    for (const auto& r : checks) {
      ++total;
      failed += !r.passed;
      if (g.json_mode()) {
        out << json{{"suite", a.suite}, {"criterion", c}, {"check", r.name},
                    {"passed", r.passed}, {"detail", r.detail}}
                   .dump()
            << "\n";
      } else {
        out << (r.passed ? "PASS " : "FAIL ") << "[" << c << "] " << r.name << ": " << r.detail
            << "\n";
      }
    }
  }
  if (g.json_mode()) {
    out << json{{"suite", a.suite}, {"checks", total}, {"failed", failed}, {"passed", failed == 0}}
               .dump()
        << "\n";
  } else {
    out << a.suite << ": " << total - failed << "/" << total << " checks passed\n";
  }
  return failed == 0 ? kOk : kSuiteFailure;
}

// Runs a command, translating library errors into exit codes. Domain errors
// mean a map-domain violation for biject and a formula-domain error elsewhere.
int guarded(const std::function<int()>& body, int domain_code, std::ostream& err) {
  try {
    return body();
  } catch (const GuardrailError& e) {
    err << "error: " << e.what() << "\n";
    return kGuardrail;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return domain_code;
  } catch (const FormulaError& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vincular pattern avoidance in k-ary words"};
  app.name("vincular");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--output", g.output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--guardrail", g.guardrail, "Cap on k^n per counting cell")
      ->check(CLI::PositiveNumber);

  CountArgs ca;
  auto* count = app.add_subcommand("count", "Count words of [k]^n avoiding a pattern");
  count->add_option("--pattern", ca.pattern, "Pattern in dash notation, e.g. 1-34-2")->required();
  count->add_option("--n", ca.n, "Word length")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--k", ca.k, "Alphabet size")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--prefix", ca.prefix, "Only words starting with this prefix");
  count->add_option("--content", ca.content, "Letter multiplicities m_1,...,m_k")->delimiter(',');

  ClassifyArgs cl;
  auto* classify = app.add_subcommand("classify", "Wilf-classify all patterns of a block type");
  classify->add_option("--type", cl.type, "Block lengths, e.g. 3,1")->required()->delimiter(',');
  classify->add_option("--n-max", cl.n_max, "Largest word length")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  classify->add_option("--k-max", cl.k_max, "Largest alphabet size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  BijectArgs ba;
  auto* biject = app.add_subcommand("biject", "Apply an explicit bijection between avoider sets");
  biject->add_option("--theorem", ba.theorem, "Map tag: 2.1, 2.5, 3.3a, 3.3b or 3.3c")->required();
  biject->add_option("--word", ba.word, "Input word (digits, or commas when k > 9)")->required();
  biject->add_option("--k", ba.k, "Alphabet size")->required()->check(CLI::PositiveNumber);
  biject->add_option("--sigma", ba.options.sigma, "Subword sigma (2.1: monotonic; 2.5: any)");
  biject->add_option("--tau", ba.options.tau, "2.1: source subword")->capture_default_str();
  biject->add_option("--rho", ba.options.rho, "2.1: target subword")->capture_default_str();
  biject->add_option("--rewriter", ba.options.rewriter, "2.1: string rewriter realizing tau ~ rho")
      ->check(CLI::IsMember({"reverse", "identity"}))
      ->capture_default_str();
  biject->add_flag("--trace", ba.trace, "Print the intermediate stages");
  biject->add_flag("--inverse", ba.inverse, "Apply the inverse map");
  biject->add_flag("--unchecked", ba.unchecked,
                   "Skip the avoidance precondition and replay the construction");

  GfArgs ga;
  auto* gf = app.add_subcommand("gf", "Evaluate a generating function W(x;k)");
  gf->add_option("--theorem", ga.theorem, "Formula tag (see --list)");
  gf->add_option("--k", ga.k, "Alphabet size")->check(CLI::NonNegativeNumber);
  gf->add_option("--order", ga.order, "Truncation order")
      ->capture_default_str()
      ->check(CLI::Range(4, 400));
  gf->add_option("--subword", ga.subword, "4.1: subword tau");
  gf->add_option("--pattern", ga.pattern, "ex4.1: one of 111-2, 112-3, 212-3, 123-4, 213-4");
  gf->add_flag("--verify", ga.verify, "Compare coefficients with enumeration");
  gf->add_option("--verify-n", ga.verify_n, "Largest n to verify (default: up to the guardrail)")
      ->check(CLI::NonNegativeNumber);
  gf->add_option("--against", ga.against,
                 "Verify the series against the counts of this pattern instead");
  gf->add_flag("--list", ga.list, "List formula tags");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", va.suite, "Suite name")
      ->check(CLI::IsMember({"all", "bijections", "classification", "genfun", "invariants"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun 'vincular --help' for usage\n";
    return kUsage;
  }

  if (count->parsed()) return guarded([&] { return cmd_count(ca, g, out); }, kUsage, err);
  if (classify->parsed()) {
    return guarded([&] { return cmd_classify(cl, g, out, err); }, kUsage, err);
  }
  if (biject->parsed()) return guarded([&] { return cmd_biject(ba, g, out); }, kMapDomain, err);
  if (gf->parsed()) return guarded([&] { return cmd_gf(ga, g, out, err); }, kUsage, err);
  if (verify->parsed()) return guarded([&] { return cmd_verify(va, g, out); }, kUsage, err);
  return kUsage;
}

}  // namespace vincular::cli
