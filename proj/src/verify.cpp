#include "sexticlab/verify.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "sexticlab/families.hpp"
#include "sexticlab/monogenic.hpp"
#include "sexticlab/sextic.hpp"
#include "sexticlab/zfactor.hpp"

namespace sexticlab {

namespace {

using Clock = std::chrono::steady_clock;
using Cell = std::pair<long, long>;

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Collects the first discrepancy and finalizes timing.
class Check {
 public:
  Check(int id, std::string title, double limit) : start_(Clock::now()) {
    r_.id = id;
    r_.title = std::move(title);
    r_.limit_seconds = limit;
  }

  void fail(const std::string& msg) {
    if (failure_.empty()) failure_ = msg;
  }
  bool ok() const { return failure_.empty(); }

  CriterionResult finish(const std::string& summary) {
    r_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    r_.passed = ok() && r_.seconds < r_.limit_seconds;
    if (!ok()) {
      r_.detail = failure_;
    } else if (r_.seconds >= r_.limit_seconds) {
      r_.detail = "time limit exceeded; " + summary;
    } else {
      r_.detail = summary;
    }
    return r_;
  }

 private:
  Clock::time_point start_;
  CriterionResult r_;
  std::string failure_;
};

std::string cell_str(long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string cells_str(const std::set<Cell>& cells) {
  std::string s = "{";
  for (const auto& [a, b] : cells) s += (s.size() > 1 ? " " : "") + cell_str(a, b);
  return s + "}";
}

// Shared body of criteria 3 and 4.
CriterionResult check_biquadratic_grid(int id, const std::string& title, long a_bound, long b_bound,
                                       EvenSextic (*sextic)(const Int&, const Int&),
                                       Int (*certificate)(const Int&, const Int&),
                                       const std::set<Cell>& expected_all,
                                       const std::vector<std::pair<Cell, IntPoly>>& expected_polys,
                                       const Budgets& budgets) {
  Check check(id, title, 60);
  std::size_t irreducible = 0, members = 0;
  std::set<Cell> monogenic;
  for (long a = -a_bound; a <= a_bound; ++a) {
    for (long b = -b_bound; b <= b_bound; ++b) {
      const EvenSextic f = sextic(Int(a), Int(b));
      const IntPoly poly = f.as_poly();
      if (!is_irreducible_q(poly, budgets.seed)) continue;
      ++irreducible;
      const bool square = is_square(certificate(Int(a), Int(b)));
      const bool c6 = classify_irreducible(f, budgets.seed).group == GaloisClass::C6;
      if (c6 != square) {
        check.fail("classify/certificate mismatch at " + cell_str(a, b));
        continue;
      }
      if (!c6) continue;
      ++members;
      const MonogenicVerdict v = monogenic_generic_irreducible(poly, budgets);
      if (v.status == MonogenicStatus::Unknown) check.fail("monogenicity undecided at " + cell_str(a, b));
      if (v.status == MonogenicStatus::Monogenic) monogenic.insert({a, b});
    }
  }
  std::set<Cell> expected;
  for (const auto& c : expected_all) {
    if (std::abs(c.first) <= a_bound && std::abs(c.second) <= b_bound) expected.insert(c);
  }
  if (monogenic != expected) {
    check.fail("monogenic members " + cells_str(monogenic) + ", expected " + cells_str(expected));
  }
  for (const auto& [cell, poly] : expected_polys) {
    if (sextic(Int(cell.first), Int(cell.second)).as_poly() != poly) {
      check.fail("member " + cell_str(cell.first, cell.second) + " is not " + to_string(poly));
    }
  }
  return check.finish(std::to_string(irreducible) + " irreducible, " + std::to_string(members) +
                      " C6 members, monogenic " + cells_str(monogenic));
}

Int f1_certificate(const Int& a, const Int& b) { return 4 * a * a * a * b - 27 * b * b; }
Int f2_certificate(const Int& a, const Int& b) { return 4 * a * b * b * b - 27; }

}  // namespace

VerifyBounds VerifyBounds::with_range(long n) {
  VerifyBounds b;
  b.ab_zero = b.f1_a = b.f1_b = b.f2_a = b.f2_b = b.f3_n = b.a4_n = b.f1_witness_n = b.f2_witness_n = n;
  return b;
}

CriterionResult check_golden_sextet(const Budgets& budgets) {
  Check check(1, "golden sextet", 1);
  const Int p26 = 64;
  const std::vector<std::pair<IntPoly, Int>> sextet = {
      {IntPoly{-3, 0, 9, 0, -6, 0, 1}, p26 * pow_int(3, 9)},
      {IntPoly{1, 0, 9, 0, 6, 0, 1}, -p26 * pow_int(3, 8)},
      {IntPoly{-7, 0, 14, 0, -7, 0, 1}, p26 * pow_int(7, 5)},
      {IntPoly{1, 0, 6, 0, 9, 0, 1}, -p26 * pow_int(3, 8)},
      {IntPoly{1, 0, 6, 0, 5, 0, 1}, -p26 * pow_int(7, 4)},
      {IntPoly{1, 0, 5, 0, 6, 0, 1}, -p26 * pow_int(7, 4)},
  };
  std::vector<IntPoly> polys;
  for (std::size_t i = 0; i < sextet.size(); ++i) {
    const auto& [poly, disc] = sextet[i];
    const std::string name = "P" + std::to_string(i + 1);
    polys.push_back(poly);
    const EvenSextic f = *as_even_sextic(poly);
    if (!is_irreducible_q(poly, budgets.seed)) {
      check.fail(name + " reducible");
      continue;
    }
    if (classify_irreducible(f, budgets.seed).group != GaloisClass::C6) check.fail(name + " not C6");
    if (monogenic_generic_irreducible(poly, budgets).status != MonogenicStatus::Monogenic) {
      check.fail(name + " not monogenic");
    }
    const Int d = discriminant(poly);
    if (d != disc) check.fail(name + " discriminant " + d.get_str() + ", expected " + disc.get_str());
    // The sign must agree with disc(g(x^2)) = -64 g(0) disc(g)^2.
    const IntPoly g = resolvent_cubic(f);
    const Int dg = discriminant(g);
    if (d != -64 * g.coeff(0) * dg * dg) check.fail(name + " violates the composition identity");
  }
  const DistinctnessReport rep = distinct_fields(polys);
  if (rep.field_count != 4) check.fail(std::to_string(rep.field_count) + " fields, expected 4");
  if (!rep.undetermined.empty()) check.fail("undetermined equal-discriminant pair");
  if (rep.distinct_signed != 4 || rep.distinct_abs != 4) check.fail("expected 4 distinct discriminant values");
  return check.finish("4 fields, " + std::to_string(rep.reciprocal_pairs.size()) + " reciprocal pairs");
}

CriterionResult check_ab_zero(long bound, const Budgets& budgets) {
  Check check(2, "ab = 0 never C6", 30);
  std::size_t irreducible = 0;
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      if (a != 0 && b != 0) continue;
      for (long c = -bound; c <= bound; ++c) {
        const EvenSextic f{Int(a), Int(b), Int(c)};
        if (!is_irreducible_q(f.as_poly(), budgets.seed)) continue;
        ++irreducible;
        if (classify_irreducible(f, budgets.seed).group == GaloisClass::C6) {
          check.fail("C6 at (a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return check.finish(std::to_string(irreducible) + " irreducible, 0 C6");
}

CriterionResult check_f1_grid(long a_bound, long b_bound, const Budgets& budgets) {
  return check_biquadratic_grid(3, "x^6+2ax^4+a^2x^2+b grid", a_bound, b_bound, f1_sextic, f1_certificate,
                                {{-3, -3}, {3, 1}},
                                {{{-3, -3}, IntPoly{-3, 0, 9, 0, -6, 0, 1}}, {{3, 1}, IntPoly{1, 0, 9, 0, 6, 0, 1}}},
                                budgets);
}

CriterionResult check_f2_grid(long a_bound, long b_bound, const Budgets& budgets) {
  return check_biquadratic_grid(4, "x^6+ab^2x^4+2abx^2+a grid", a_bound, b_bound, f2_sextic, f2_certificate,
                                {{-7, -1}, {1, 3}},
                                {{{-7, -1}, IntPoly{-7, 0, 14, 0, -7, 0, 1}}, {{1, 3}, IntPoly{1, 0, 6, 0, 9, 0, 1}}},
                                budgets);
}

CriterionResult check_f3_family(long n_bound, const Budgets& budgets) {
  Check check(5, "x^6+(n^2+5)x^4+(n^2+2n+6)x^2+1", 30);
  std::set<long> monogenic;
  for (long n = -n_bound; n <= n_bound; ++n) {
    const Int N(n);
    const EvenSextic f = f3_poly(N);
    const IntPoly poly = f.as_poly();
    const std::string at = " at n=" + std::to_string(n);
    const Int expected = -64 * pow_int(N * N + N - 1, 4) * pow_int(N * N + N + 7, 4);
    if (discriminant(poly) != expected) check.fail("discriminant" + at);
    if (!is_irreducible_q(poly, budgets.seed)) {
      check.fail("reducible" + at);
      continue;
    }
    if (classify_irreducible(f, budgets.seed).group != GaloisClass::C6) check.fail("not C6" + at);
    const MonogenicVerdict v = monogenic_generic_irreducible(poly, budgets);
    if (v.status == MonogenicStatus::Unknown) check.fail("monogenicity undecided" + at);
    if (v.status == MonogenicStatus::Monogenic) monogenic.insert(n);
  }
  std::set<long> expected;
  for (long n : {-2L, -1L, 0L, 1L}) {
    if (std::abs(n) <= n_bound) expected.insert(n);
  }
  std::string got;
  for (long n : monogenic) got += (got.empty() ? "" : " ") + std::to_string(n);
  if (monogenic != expected) check.fail("monogenic for n in {" + got + "}");
  return check.finish(std::to_string(2 * n_bound + 1) + " members C6, monogenic n in {" + got + "}");
}

CriterionResult check_a4_family(long n_bound, const Budgets& budgets) {
  Check check(6, "x^6+(3n+4)x^4+(3n+1)x^2-1", 60);
  std::set<long> ns;
  for (long n = -n_bound; n <= n_bound; ++n) ns.insert(n);
  ns.insert(34);  // the non-squarefree example is always included

  std::size_t monogenic = 0;
  std::set<Int> monogenic_discs;
  for (long n : ns) {
    const auto [f, D] = a4_poly(Int(n));
    const IntPoly poly = f.as_poly();
    const std::string at = " at n=" + std::to_string(n);
    const Int disc = discriminant(poly);
    if (disc != 64 * pow_int(D, 4)) check.fail("discriminant" + at);
    if (!is_irreducible_q(poly, budgets.seed)) {
      check.fail("reducible" + at);
      continue;
    }
    if (classify_irreducible(f, budgets.seed).group != GaloisClass::A4) check.fail("not A4" + at);
    const MonogenicVerdict v = monogenic_generic_irreducible(poly, budgets);
    const Tristate sqf = is_squarefree(D, budgets);
    if (v.status == MonogenicStatus::Unknown || sqf == Tristate::Unknown) check.fail("undecided" + at);
    if ((v.status == MonogenicStatus::Monogenic) != (sqf == Tristate::True)) {
      check.fail("monogenic/squarefree mismatch" + at);
    }
    if (v.status == MonogenicStatus::Monogenic) {
      ++monogenic;
      if (!monogenic_discs.insert(disc).second) check.fail("repeated discriminant" + at);
    }
    if (n == 34) {
      if (D != 49 * 223) check.fail("9n^2+15n+13 at n=34 is " + D.get_str());
      if (v.status != MonogenicStatus::NotMonogenic || v.witness_prime != Int(7)) {
        check.fail("n=34 should be NotMonogenic with witness 7");
      }
    }
  }
  return check.finish(std::to_string(ns.size()) + " members A4, " + std::to_string(monogenic) +
                      " monogenic with distinct discriminants");
}

CriterionResult check_witness_families(long f1_n, long f2_n, const Budgets& budgets) {
  Check check(7, "infinite-family witnesses", 10);
  std::size_t count = 0;
  for (long n = 1; n <= f1_n; ++n) {
    const Int N(n);
    const auto [a, b] = f1_witness(N);
    const std::string at = " at n=" + std::to_string(n);
    if (!f1_member(a, b, budgets.seed)) check.fail("f1 witness not a member" + at);
    const Int dg = discriminant(resolvent_cubic(f1_sextic(a, b)));
    if (dg != pow_int(6 * N + 1, 2) * pow_int(9 * N * N + 3 * N + 7, 4)) check.fail("f1 disc(g)" + at);
    ++count;
  }
  for (long n = -f2_n; n <= f2_n; ++n) {
    const Int N(n);
    const auto [a, b] = f2_witness(N);
    const std::string at = " at n=" + std::to_string(n);
    if (!f2_member(a, b, budgets.seed)) check.fail("f2 witness not a member" + at);
    const Int dg = discriminant(resolvent_cubic(f2_sextic(a, b)));
    if (dg != pow_int(6 * N + 5, 2) * pow_int(9 * N * N + 15 * N + 13, 2)) check.fail("f2 disc(g)" + at);
    ++count;
  }
  return check.finish(std::to_string(count) + " witnesses");
}

CriterionResult check_oracle_equivalence(const VerifyBounds& bounds, const Budgets& budgets) {
  Check check(8, "specialized tests agree with Dedekind", 60);
  std::size_t compared = 0, skipped = 0;
  auto compare = [&](const char* name, const IntPoly& poly, const MonogenicVerdict& special, long a, long b) {
    const MonogenicVerdict generic = monogenic_generic_irreducible(poly, budgets);
    if (special.status == MonogenicStatus::Unknown || generic.status == MonogenicStatus::Unknown) {
      ++skipped;
      return;
    }
    ++compared;
    if (special.status != generic.status) {
      check.fail(std::string(name) + " disagrees at " + cell_str(a, b) + ": " + to_string(special.status) +
                 " vs " + to_string(generic.status));
    }
  };
  for (long a = -bounds.f1_a; a <= bounds.f1_a; ++a) {
    for (long b = -bounds.f1_b; b <= bounds.f1_b; ++b) {
      const IntPoly poly = jly_poly(Int(a), Int(b));
      if (!is_irreducible_q(poly, budgets.seed)) continue;
      compare("jly", poly, jly_check(Int(a), Int(b), budgets), a, b);
    }
  }
  for (long a = -bounds.f2_a; a <= bounds.f2_a; ++a) {
    for (long b = -bounds.f2_b; b <= bounds.f2_b; ++b) {
      const IntPoly poly = jkk_poly(Int(a), Int(b));
      if (!is_irreducible_q(poly, budgets.seed)) continue;
      compare("jkk", poly, jkk_check(Int(a), Int(b), budgets), a, b);
    }
  }
  return check.finish(std::to_string(compared) + " compared, " + std::to_string(skipped) + " undecided");
}

std::vector<CriterionResult> verify_paper(const VerifyBounds& bounds, const Budgets& budgets,
                                          const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<std::function<CriterionResult()>> steps = {
      [&] { return check_golden_sextet(budgets); },
      [&] { return check_ab_zero(bounds.ab_zero, budgets); },
      [&] { return check_f1_grid(bounds.f1_a, bounds.f1_b, budgets); },
      [&] { return check_f2_grid(bounds.f2_a, bounds.f2_b, budgets); },
      [&] { return check_f3_family(bounds.f3_n, budgets); },
      [&] { return check_a4_family(bounds.a4_n, budgets); },
      [&] { return check_witness_families(bounds.f1_witness_n, bounds.f2_witness_n, budgets); },
      [&] { return check_oracle_equivalence(bounds, budgets); },
  };
  std::vector<CriterionResult> results;
  for (const auto& step : steps) {
    results.push_back(step());
    if (on_result) on_result(results.back());
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%3d  %s  %8.2fs / %gs  ", r.id, r.passed ? "PASS" : "FAIL", r.seconds,
                r.limit_seconds);
  return head + r.title + "  (" + r.detail + ")";
}

}  // namespace sexticlab
