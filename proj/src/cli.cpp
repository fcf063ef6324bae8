#include "sexticlab/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sexticlab/error.hpp"
#include "sexticlab/expr.hpp"
#include "sexticlab/families.hpp"
#include "sexticlab/monogenic.hpp"
#include "sexticlab/scan.hpp"
#include "sexticlab/sextic.hpp"
#include "sexticlab/verify.hpp"
#include "sexticlab/zfactor.hpp"

namespace sexticlab::cli {

namespace {

class Table {
 public:
  void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows_) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string factorization_str(const PrimeFactorization& f) {
  std::string s = f.sign < 0 ? "-1" : "";
  auto append = [&](const std::string& term) { s += (s.empty() ? "" : " * ") + term; };
  for (const auto& [p, e] : f.factors) append(e == 1 ? p.get_str() : p.get_str() + "^" + std::to_string(e));
  if (!f.complete) append("[" + f.cofactor.get_str() + " unfactored]");
  return s.empty() ? "1" : s;
}

Int parse_int(const std::string& text, const std::string& what) {
  Int v;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || v.set_str(t, 10) != 0) throw DomainError("invalid integer for " + what + ": '" + text + "'");
  return v;
}

void add_verdict_rows(Table& t, const MonogenicVerdict& v, const std::string& prefix = "") {
  t.row(prefix + "monogenic", to_string(v.status));
  if (v.witness_prime) t.row(prefix + "witness prime", v.witness_prime->get_str());
  if (v.unfactored) t.row(prefix + "unfactored", v.unfactored->get_str());
  std::string checked;
  for (const auto& c : v.checked_primes) checked += (checked.empty() ? "" : " ") + c.prime.get_str() + (c.passed ? ":ok" : ":fails");
  t.row(prefix + "checked primes", checked.empty() ? "none" : checked);
}

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t trial_bound = Budgets{}.trial_bound;
  std::uint64_t rho_budget = Budgets{}.rho_budget;
  Budgets budgets() const { return {trial_bound, rho_budget, seed}; }
};

// Returns the first factor if poly is reducible, for user-facing reporting.
std::optional<IntPoly> reducible_factor(const IntPoly& poly, std::uint64_t seed) {
  if (is_irreducible_q(poly, seed)) return std::nullopt;
  return factor_q(poly, seed).front().factor;
}

int cmd_disc(const std::string& text, std::ostream& out, const Globals& g) {
  const IntPoly p = parse_poly(text);
  const Int d = discriminant(p);
  Table t;
  t.row("polynomial", to_string(p));
  t.row("discriminant", d.get_str());
  t.row("factored", d == 0 ? "0" : factorization_str(factorize(d, g.budgets())));
  t.print(out);
  return kOk;
}

int cmd_classify(const std::string& text, std::ostream& out, std::ostream& err, const Globals& g) {
  const IntPoly p = parse_poly(text);
  const auto f = as_even_sextic(p);
  if (!f) {
    err << "classify: " << to_string(p) << " is not of the form x^6+ax^4+bx^2+c\n";
    return kBadInput;
  }
  Table t;
  t.row("polynomial", to_string(p));
  if (auto factor = reducible_factor(p, g.seed)) {
    t.row("irreducible", "no (factor " + to_string(*factor) + ")");
    t.print(out);
    return kOk;
  }
  const GaloisVerdict v = classify_irreducible(*f, g.seed);
  t.row("galois", to_string(v.group));
  t.row("-c square", yes_no(v.neg_c_square));
  t.row("disc(g) square", yes_no(v.disc_g_square));
  t.row("h reducible", yes_no(v.h_reducible));
  t.print(out);
  return kOk;
}

int cmd_monogenic(const std::string& text, const std::string& method, bool cross_check, std::ostream& out,
                  std::ostream& err, const Globals& g) {
  const IntPoly p = parse_poly(text);
  if (!p.is_monic()) {
    err << "monogenic: " << to_string(p) << " is not monic\n";
    return kBadInput;
  }
  Table t;
  t.row("polynomial", to_string(p));
  if (auto factor = reducible_factor(p, g.seed)) {
    t.row("irreducible", "no (factor " + to_string(*factor) + ")");
    t.print(out);
    return kOk;
  }
  if (method == "generic") {
    add_verdict_rows(t, monogenic_generic_irreducible(p, g.budgets()));
    t.print(out);
    return kOk;
  }
  const auto params = method == "jly" ? match_jly(p) : match_jkk(p);
  if (!params) {
    err << "monogenic: " << to_string(p) << " does not have the " << method << " shape\n";
    return kBadInput;
  }
  const auto& [a, b] = *params;
  t.row("a, b", a.get_str() + ", " + b.get_str());
  const MonogenicVerdict v = method == "jly" ? jly_check(a, b, g.budgets()) : jkk_check(a, b, g.budgets());
  add_verdict_rows(t, v);
  if (cross_check) {
    const MonogenicVerdict generic = monogenic_generic_irreducible(p, g.budgets());
    add_verdict_rows(t, generic, "generic ");
    const bool comparable = v.status != MonogenicStatus::Unknown && generic.status != MonogenicStatus::Unknown;
    t.row("agreement", comparable ? yes_no(v.status == generic.status) : "undecided");
    t.print(out);
    return comparable && v.status != generic.status ? kVerificationFailed : kOk;
  }
  t.print(out);
  return kOk;
}

int cmd_hjms(const std::string& A_text, const std::string& B_text, const std::string& C_text,
             const std::string& bound_text, std::ostream& out) {
  const Int A = parse_int(A_text, "--A"), B = parse_int(B_text, "--B"), C = parse_int(C_text, "--C");
  const Int bound = bound_text.empty() ? hjms_default_bound(A, B, C) : parse_int(bound_text, "--bound");
  const auto w = hjms_witness(A, B, C, bound);
  if (w) {
    out << "witness m=" << w->first << " n=" << w->second << '\n';
  } else {
    out << "none (bound " << bound << ")\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for even sextic polynomials x^6+ax^4+bx^2+c", "sexticlab"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* seed_opt = app.add_option("--seed", g.seed, "Seed for randomized internals (affects speed only)");
  app.add_option("--trial-bound", g.trial_bound, "Trial division bound for integer factoring");
  app.add_option("--rho-budget", g.rho_budget, "Pollard rho iteration budget");

  std::string poly_text;
  auto* disc = app.add_subcommand("disc", "Discriminant and its factorization");
  disc->add_option("poly", poly_text, "Polynomial, e.g. \"x^6-6x^4+9x^2-3\" or \"-3,0,9,0,-6,0,1\"")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Galois group of an even sextic (C6, A4 or Other)");
  classify_cmd->add_option("poly", poly_text)->required();

  std::string method = "generic";
  bool cross_check = false;
  auto* mono = app.add_subcommand("monogenic", "Monogenicity via Dedekind's criterion or a specialized test");
  mono->add_option("poly", poly_text)->required();
  mono->add_option("--method", method)->check(CLI::IsMember({"generic", "jly", "jkk"}));
  mono->add_flag("--cross-check", cross_check, "Also run the generic test and compare");

  std::string family_text;
  long min = 0, max = 0;
  std::optional<long> bmin, bmax;
  unsigned jobs = 1;
  bool no_timing = false;
  auto* scan = app.add_subcommand("scan", "Evaluate a parameter range as JSON lines");
  scan->add_option("--family", family_text)->required()->check(CLI::IsMember({"f1", "f2", "f3", "a4"}));
  scan->add_option("--min", min)->required();
  scan->add_option("--max", max)->required();
  scan->add_option("--bmin", bmin, "Lower bound for b (f1, f2; default --min)");
  scan->add_option("--bmax", bmax, "Upper bound for b (f1, f2; default --max)");
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  scan->add_flag("--no-timing", no_timing, "Write ms as 0 for byte-reproducible output");

  std::string A_text, B_text, C_text, bound_text;
  auto* hjms = app.add_subcommand("hjms", "Search for a factorization witness of x^6+Ax^4+Bx^2-C^2");
  hjms->add_option("--A", A_text)->required();
  hjms->add_option("--B", B_text)->required();
  hjms->add_option("--C", C_text)->required();
  hjms->add_option("--bound", bound_text, "Search bound (default 4*max(|A|,|B|,|C|,10))");

  std::string target;
  std::optional<long> range;
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("target", target)->required()->check(CLI::IsMember({"paper"}));
  verify->add_option("--range", range, "Use N for every scan bound")->check(CLI::Range(1L, 100000L));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  if (const char* env = std::getenv("SEXTICLAB_SEED"); env && seed_opt->count() == 0) {
    try {
      std::size_t used = 0;
      g.seed = std::stoull(env, &used);
      if (used != std::string_view(env).size() || env[0] == '-') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "SEXTICLAB_SEED must be a non-negative integer\n";
      return kBadInput;
    }
  }

  try {
    if (*disc) return cmd_disc(poly_text, out, g);
    if (*classify_cmd) return cmd_classify(poly_text, out, err, g);
    if (*mono) return cmd_monogenic(poly_text, method, cross_check, out, err, g);
    if (*hjms) return cmd_hjms(A_text, B_text, C_text, bound_text, out);
    if (*scan) {
      const Family family = family_text == "f1"   ? Family::F1
                            : family_text == "f2" ? Family::F2
                            : family_text == "f3" ? Family::F3
                                                  : Family::A4Fam;
      const ScanSpec spec{family, min, max, bmin, bmax};
      for (const auto& r : run_scan(spec, jobs, g.budgets())) out << to_json_line(r, !no_timing) << '\n';
      return kOk;
    }
    if (*verify) {
      const VerifyBounds bounds = range ? VerifyBounds::with_range(*range) : VerifyBounds{};
      bool all = true;
      verify_paper(bounds, g.budgets(), [&](const CriterionResult& r) {
        out << format_result(r) << std::endl;
        all = all && r.passed;
      });
      out << (all ? "all criteria passed" : "verification FAILED") << '\n';
      return all ? kOk : kVerificationFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace sexticlab::cli
