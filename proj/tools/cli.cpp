#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "octabasic/families.hpp"
#include "octabasic/motzkin.hpp"
#include "octabasic/oddfamily.hpp"
#include "octabasic/orthopoly.hpp"
#include "octabasic/permstat.hpp"
#include "octabasic/poly_json.hpp"
#include "octabasic/qseries.hpp"

namespace octabasic::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kSymbolicDefault = 6;
constexpr int kSpecializedDefault = 9;

std::optional<SpecFamily> parse_spec(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "t2") return SpecFamily::T2;
  if (s == "t3") return SpecFamily::T3;
  if (s == "ql") return SpecFamily::QL;
  throw UsageError("--spec must be t2, t3 or ql");
}

RecurrenceCoeffs family_coeffs(const std::string& family, int alpha, std::optional<SpecFamily> spec) {
  RecurrenceCoeffs c;
  if (family == "octabasic") {
    c = octabasic_coeffs();
  } else if (family == "odd") {
    c = odd_coeffs(SymmetricChain{});
  } else if (family == "qjacobi") {
    c = qjacobi_coeffs(alpha);
  } else if (family == "sum2") {
    c = sum2_coeffs();
  } else if (family == "qlaguerre") {
    c = qlaguerre_coeffs(alpha);
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  if (spec) {
    if (family != "octabasic" && family != "odd")
      throw UsageError("--spec applies only to the octabasic and odd families");
    c = specialize(c, specialization(*spec));
  }
  return c;
}

// Closed-form counterpart of p_n for the requested family, if one exists.
std::optional<std::function<Poly(int)>> explicit_formula(const std::string& family, int alpha,
                                                         std::optional<SpecFamily> spec) {
  if (family == "qjacobi" && alpha == 0) return [](int n) { return qjacobi_explicit(n); };
  if (family == "sum2") return [](int n) { return sum2_explicit(n); };
  if (family == "qlaguerre") return [alpha](int n) { return qlaguerre_explicit(n, alpha); };
  if (family == "octabasic" && spec) {
    switch (*spec) {
      case SpecFamily::T2:
        return [](int n) { return qjacobi_explicit(n); };
      case SpecFamily::T3:
        return [](int n) { return sum2_explicit(n); };
      case SpecFamily::QL:
        return [](int n) { return qlaguerre_explicit(n, 0); };
    }
  }
  return std::nullopt;
}

void print_sequence(std::ostream& out, const std::string& label, const std::vector<Poly>& seq,
                    const std::string& format, const std::string& family, const std::string& spec) {
  if (format == "json") {
    auto items = nlohmann::json::array();
    for (std::size_t n = 0; n < seq.size(); ++n) items.push_back({{"n", n}, {"poly", poly_to_json(seq[n])}});
    nlohmann::json doc{{"family", family}, {"spec", spec.empty() ? nlohmann::json() : nlohmann::json(spec)},
                       {label, items}};
    out << doc.dump(2) << '\n';
  } else {
    const std::string sym = label == "moments" ? "mu_" : "p_";
    for (std::size_t n = 0; n < seq.size(); ++n) out << sym << n << " = " << seq[n].to_string() << '\n';
  }
}

// ------------------------------------------------------------------ verify

struct Row {
  int n;
  bool pass;
  std::string detail;
};

class Table {
 public:
  explicit Table(std::ostream& out, std::string title) : out_(out) { out_ << title << '\n'; }
  void add(Row r) {
    all_ &= r.pass;
    out_ << "  n=" << std::setw(2) << r.n << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << std::endl;
  }
  int finish() {
    out_ << (all_ ? "all checks passed" : "FAILED") << std::endl;
    return all_ ? 0 : 1;
  }

 private:
  std::ostream& out_;
  bool all_ = true;
};

Poly path_moment(int n) {
  Poly sum;
  for_each_path(n, [&](const WeightedMotzkinPath& p) { sum += path_weight(p); });
  return sum;
}

int verify_theorem1(int max_n, std::ostream& out) {
  Table t(out, "theorem1: permutation sum = weighted path sum = recurrence moment");
  const auto mu = moments_from_recurrence(octabasic_coeffs(), max_n);
  for (int n = 0; n <= max_n; ++n) {
    const Poly perms = moment_via_permutations(n);
    const Poly paths = path_moment(n);
    const bool ok = perms == mu[n] && paths == mu[n];
    t.add({n, ok, std::to_string(mu[n].size()) + " monomials"});
  }
  return t.finish();
}

int verify_mahonian(RunTerm run_term, int max_n, std::ostream& out) {
  const bool thm2 = run_term == RunTerm::n_minus_run;
  Table t(out, std::string(thm2 ? "theorem2" : "theorem3") +
                   ": 16 coefficient variants and shifts c in {-2,-1,1,2} are all Mahonian");
  std::vector<StatProfile> profiles = coefficient_variants(run_term);
  const StatProfile base = thm2 ? StatProfile::theorem2() : StatProfile::theorem3();
  for (int c : {-2, -1, 1, 2}) {
    StatProfile p = base;
    p.shift = c;
    profiles.push_back(p);
  }
  for (int n = 1; n <= max_n; ++n) {
    const auto target = qfactorial_distribution(n);
    const auto dists = distributions(n, profiles);
    int good = 0;
    for (const auto& d : dists) good += d == target;
    t.add({n, good == static_cast<int>(dists.size()),
           std::to_string(good) + "/" + std::to_string(dists.size()) + " profiles equal n!_q"});
  }
  return t.finish();
}

int verify_theorem4(int max_n, std::ostream& out) {
  Table t(out, "theorem4: run-1 and n-run variants equal n!_q");
  for (int n = 1; n <= max_n; ++n) {
    const auto target = qfactorial_distribution(n);
    const auto d = theorem4_distributions(n);
    const bool a = d[static_cast<int>(RunTerm::run_minus_1)] == target;
    const bool b = d[static_cast<int>(RunTerm::n_minus_run)] == target;
    t.add({n, a && b, std::string("run-1 ") + (a ? "ok" : "differs") + ", n-run " + (b ? "ok" : "differs")});
  }
  return t.finish();
}

int verify_identity35(int max_n, std::ostream& out) {
  Table t(out, "identity35: lsg(op)+rsg(op) = lsg(clos)+rsg(clos) on all of S_n");
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t bad = 0, total = 0;
    PermutationScan scan;
    for_each_permutation(n, [&](std::span<const std::uint8_t> w) {
      scan.load(w);
      const auto& f = scan.features();
      ++total;
      if (f[0] + f[1] != f[2] + f[3]) ++bad;
    });
    t.add({n, bad == 0, std::to_string(total) + " permutations, " + std::to_string(bad) + " violations"});
  }
  return t.finish();
}

int verify_prop1(int max_n, std::ostream& out) {
  Table t(out, "prop1: specialized moments = q n!_q and measure moments agree at q = 0.3, 0.5");
  const auto mu = moments_from_recurrence(specialize(octabasic_coeffs(), spec_theorem3()), max_n);
  const auto sum2 = moments_from_recurrence(sum2_coeffs(), max_n);
  const auto m3 = prop1_measure(0.3, 80);
  const auto m5 = prop1_measure(0.5, 80);
  for (int n = 0; n <= max_n; ++n) {
    const Poly target = moment_closed_form(SpecFamily::T3, n);
    double worst = 0;
    for (const auto* m : {&m3, &m5}) {
      const double expect = eval_numeric(target, {{VarId::q, m->q}});
      worst = std::max(worst, std::abs(m->moment(n) - expect) / std::abs(expect));
    }
    const bool ok = mu[n] == target && sum2[n] == target && worst < 1e-9;
    std::ostringstream d;
    d << "max rel err " << std::scientific << std::setprecision(2) << worst;
    t.add({n, ok, d.str()});
  }
  return t.finish();
}

int verify_odd(int max_n, std::ostream& out) {
  Table t(out, "odd-moments: quotient relation and the three odd specializations");
  const SymmetricChain chain;
  const auto odd = odd_moments(chain, max_n);
  const auto even = moments_from_recurrence(even_coeffs(chain), max_n + 1);
  std::array<MomentSequence, 3> special;
  for (int which = 1; which <= 3; ++which)
    special[which - 1] = moments_from_recurrence(
        specialize(odd_coeffs(chain), specialization(odd_family_specialization(which))), max_n);
  for (int n = 0; n <= max_n; ++n) {
    bool quotient = false;
    try {
      quotient = exact_divide(even[n + 1], even[1]) == odd[n];
    } catch (const InexactDivision&) {
    }
    int fams = 0;
    for (int which = 1; which <= 3; ++which) fams += special[which - 1][n] == odd_moment_closed_form(which, n);
    t.add({n, quotient && fams == 3,
           std::string("quotient ") + (quotient ? "exact" : "FAILS") + ", " + std::to_string(fams) +
               "/3 specializations"});
  }
  return t.finish();
}

int verify_restricted(int max_n, std::ostream& out) {
  Table t(out, "restricted-count: qualifying permutations of S_{n+1} number n!");
  std::uint64_t fact = 1;
  for (int n = 1; n <= max_n; ++n) {
    fact *= n;
    const auto c = restricted_count(n);
    t.add({n, c == fact, std::to_string(c) + " of expected " + std::to_string(fact)});
  }
  return t.finish();
}

// ---------------------------------------------------------------- commands

void print_path(std::ostream& out, const WeightedMotzkinPath& path, const std::vector<TraceStep>* trace,
                const Permutation& sigma, const std::string& format) {
  if (format == "json") {
    auto steps = nlohmann::json::array();
    for (const auto& s : path.steps)
      steps.push_back({{"kind", std::string(step_name(s.kind))}, {"j", s.j}, {"k", s.k}});
    nlohmann::json doc{{"path", path.to_string()},
                       {"steps", steps},
                       {"permutation", sigma.to_string()},
                       {"runs", sigma.to_string(true)},
                       {"weight", poly_to_json(path_weight(path))}};
    if (trace) doc["trace"] = trace_to_json(*trace);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "path: " << path.to_string() << '\n';
  out << "permutation: " << sigma.to_string() << '\n';
  out << "runs: " << sigma.to_string(true) << '\n';
  out << "weight: " << path_weight(path).to_string() << '\n';
  if (trace) out << format_trace(*trace);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Octabasic Laguerre polynomials: moments, Mahonian statistics and the path bijection"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  // moments / polys
  std::string family, spec_name, format = "text";
  int n = 0, alpha = 0;
  bool explicit_check = false;
  auto* moments = app.add_subcommand("moments", "Moments mu_0..mu_N of a family");
  auto* polys = app.add_subcommand("polys", "Monic polynomials p_0..p_N of a family");
  for (auto* sc : {moments, polys}) {
    sc->add_option("--family", family, "octabasic | qjacobi | sum2 | qlaguerre | odd")
        ->required()
        ->check(CLI::IsMember({"octabasic", "qjacobi", "sum2", "qlaguerre", "odd"}));
    sc->add_option("--spec", spec_name, "t2 | t3 | ql (octabasic and odd only)")
        ->check(CLI::IsMember({"t2", "t3", "ql"}));
    sc->add_option("--n", n, "Highest index")->required()->check(CLI::Range(0, 40));
    sc->add_option("--alpha", alpha, "alpha for qjacobi / qlaguerre")->check(CLI::Range(0, 20));
    sc->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  }
  polys->add_flag("--explicit", explicit_check, "Cross-check against the explicit formula");

  // stats
  std::string profile_text;
  std::string stats_format = "text";
  int stats_n = 0;
  auto* stats = app.add_subcommand("stats", "Distribution of a profile statistic over S_n");
  stats->add_option("--n", stats_n, "Permutation size")->required()->check(CLI::Range(1, 11));
  stats->add_option("--profile", profile_text, "e.g. \"run=n-run; op=2,1; clos=2,1; cont=2,1; sing=2,1; shift=0\"")
      ->required();
  stats->add_option("--format", stats_format, "csv | text")->check(CLI::IsMember({"csv", "text"}));

  // verify
  std::string what;
  int max_n = -1;
  auto* verify = app.add_subcommand("verify", "Exhaustive checks with a per-n pass/fail table");
  verify->add_option("check", what, "theorem1 | theorem2 | theorem3 | theorem4 | identity35 | prop1 | odd-moments | restricted-count")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "theorem3", "theorem4", "identity35", "prop1", "odd-moments",
                             "restricted-count"}));
  verify->add_option("--max-n", max_n, "Largest n to check")->check(CLI::Range(0, 11));

  // bijection
  std::string path_text, perm_text, bij_format = "text";
  bool trace = false;
  auto* bijection = app.add_subcommand("bijection", "Weighted Motzkin path <-> permutation");
  bijection->require_subcommand(1);
  auto* encode = bijection->add_subcommand("encode", "Path to permutation");
  encode->add_option("--path", path_text, "e.g. \"NE(0,0),SE(0,0)\"")->required();
  auto* decode = bijection->add_subcommand("decode", "Permutation to path");
  decode->add_option("--perm", perm_text, "e.g. \"2 6 3 5 7 4 1 8 9\"")->required();
  for (auto* sc : {encode, decode}) {
    sc->add_flag("--trace", trace, "Show the insertion steps");
    sc->add_option("--format", bij_format, "json | text")->check(CLI::IsMember({"json", "text"}));
  }

  // measure
  std::string measure_what;
  double qval = 0.5;
  int truncate = 80, measure_n = 6, measure_alpha = 0;
  auto* measure = app.add_subcommand("measure", "Numeric discrete-measure moment check");
  measure->add_option("which", measure_what, "prop1 | qjacobi")->required()->check(CLI::IsMember({"prop1", "qjacobi"}));
  measure->add_option("--q", qval, "q in (0,1)")->required()->check(CLI::Range(0.0, 1.0));
  measure->add_option("--truncate", truncate, "Number of atoms")->check(CLI::Range(1, 200));
  measure->add_option("--max-n", measure_n, "Highest moment")->check(CLI::Range(0, 8));
  measure->add_option("--alpha", measure_alpha, "qjacobi alpha")->check(CLI::Range(0, 20));

  std::vector<std::string> argv_store{"octabasic"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (moments->parsed() || polys->parsed()) {
      const auto spec = parse_spec(spec_name);
      const auto coeffs = family_coeffs(family, alpha, spec);
      if (moments->parsed()) {
        print_sequence(out, "moments", moments_from_recurrence(coeffs, n), format, family, spec_name);
        return 0;
      }
      const auto seq = monic_sequence(coeffs, n);
      print_sequence(out, "polys", seq, format, family, spec_name);
      if (!explicit_check) return 0;
      auto formula = explicit_formula(family, alpha, spec);
      if (!formula) throw UsageError("no explicit formula for this family");
      bool ok = true;
      for (int k = 0; k <= n; ++k) {
        const bool same = (*formula)(k) == seq[k];
        ok &= same;
        (format == "json" ? err : out) << "explicit p_" << k << ": " << (same ? "PASS" : "FAIL") << '\n';
      }
      return ok ? 0 : 1;
    }

    if (stats->parsed()) {
      const auto prof = StatProfile::parse(profile_text);
      const auto dist = distribution(stats_n, prof);
      const bool ok = dist == qfactorial_distribution(stats_n);
      const std::string verdict = std::string(ok ? "PASS" : "FAIL") + ": distribution " +
                                  (ok ? "equals" : "differs from") + " " + std::to_string(stats_n) + "!_q";
      if (stats_format == "csv") {
        out << distribution_csv(dist);
        err << verdict << '\n';
      } else {
        out << "profile: " << prof.to_string() << '\n';
        out << "sum = " << to_poly(dist).to_string() << '\n';
        out << verdict << '\n';
      }
      return ok ? 0 : 1;
    }

    if (verify->parsed()) {
      auto bound = [&](int symbolic_default) { return max_n >= 0 ? max_n : symbolic_default; };
      if (what == "theorem1") return verify_theorem1(bound(kSymbolicDefault), out);
      if (what == "theorem2") return verify_mahonian(RunTerm::n_minus_run, bound(kSpecializedDefault), out);
      if (what == "theorem3") return verify_mahonian(RunTerm::run_minus_1, bound(kSpecializedDefault), out);
      if (what == "theorem4") return verify_theorem4(bound(kSpecializedDefault), out);
      if (what == "identity35") return verify_identity35(bound(8), out);
      if (what == "prop1") return verify_prop1(bound(kSpecializedDefault), out);
      if (what == "odd-moments") return verify_odd(bound(kSymbolicDefault), out);
      if (what == "restricted-count") return verify_restricted(bound(7), out);
    }

    if (encode->parsed()) {
      const auto path = WeightedMotzkinPath::parse(path_text);
      std::vector<TraceStep> steps;
      const auto sigma = path_to_perm(path, &steps);
      print_path(out, path, trace ? &steps : nullptr, sigma, bij_format);
      return 0;
    }
    if (decode->parsed()) {
      const auto sigma = Permutation::parse(perm_text);
      const auto path = perm_to_path(sigma);
      std::vector<TraceStep> steps;
      const auto back = path_to_perm(path, &steps);
      if (!(back == sigma)) {
        err << "internal error: round trip produced " << back.to_string() << '\n';
        return 1;
      }
      print_path(out, path, trace ? &steps : nullptr, sigma, bij_format);
      return 0;
    }

    if (measure->parsed()) {
      if (!(qval > 0.0 && qval < 1.0)) throw UsageError("--q must lie strictly between 0 and 1");
      const auto rep = measure_what == "prop1" ? prop1_measure_check(qval, truncate, measure_n)
                                               : qjacobi_measure_check(measure_alpha, qval, truncate, measure_n);
      out << rep.to_json().dump(2) << '\n';
      return rep.pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const MalformedPath& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace octabasic::cli
