#include "sexticlab/monogenic.hpp"

#include <set>
#include <stdexcept>

#include "sexticlab/error.hpp"
#include "sexticlab/polymodp.hpp"
#include "sexticlab/zfactor.hpp"

namespace sexticlab {

namespace {

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool divides(const Int& d, const Int& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

void require_monic_irreducible(const IntPoly& T, std::uint64_t seed) {
  if (!T.is_monic()) throw DomainError("monogenicity: polynomial must be monic");
  if (!is_irreducible_q(T, seed)) throw DomainError("monogenicity: " + to_string(T) + " is reducible over Q");
}

// Adds the primes of n to `primes`; returns the unfactored cofactor (1 if none).
Int collect_primes(const Int& n, const Budgets& budgets, std::set<Int>& primes) {
  if (n == 0) return 1;
  const PrimeFactorization f = factorize(n, budgets);
  for (const auto& [p, e] : f.factors) primes.insert(p);
  return f.cofactor;
}

// Shared driver for the two specialized tests: walks primes in increasing
// order and stops at the first failure.
template <typename Test>
MonogenicVerdict run_prime_tests(const std::set<Int>& primes, const Int& unfactored, Test&& test) {
  MonogenicVerdict v;
  for (const auto& p : primes) {
    const bool ok = test(p);
    v.checked_primes.push_back({p, ok});
    if (!ok) {
      v.status = MonogenicStatus::NotMonogenic;
      v.witness_prime = p;
      return v;
    }
  }
  if (unfactored != 1) {
    v.status = MonogenicStatus::Unknown;
    v.unfactored = unfactored;
    return v;
  }
  v.status = MonogenicStatus::Monogenic;
  return v;
}

}  // namespace

std::string to_string(MonogenicStatus s) {
  switch (s) {
    case MonogenicStatus::Monogenic: return "Monogenic";
    case MonogenicStatus::NotMonogenic: return "NotMonogenic";
    case MonogenicStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool dedekind_test(const IntPoly& T, const Int& p, std::uint64_t seed) {
  if (!T.is_monic()) throw DomainError("dedekind: polynomial must be monic");
  const ModPoly t_bar = reduce(T, p);  // validates p
  const std::uint64_t q = t_bar.modulus();

  IntPoly h1{1};
  ModPoly h1_bar = ModPoly::constant(q, 1);
  for (const auto& [tau, e] : factor_modp(t_bar, seed)) {
    h1 *= lift(tau);
    h1_bar = h1_bar * tau;
  }
  const ModPoly h2_bar = divmod(t_bar, h1_bar).first;
  const IntPoly h2 = lift(h2_bar);

  std::vector<Int> diff = (h1 * h2 - T).coeffs();
  for (auto& c : diff) {
    if (!divides(p, c)) throw std::logic_error("dedekind: h1*h2 - T is not divisible by p");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  }
  const ModPoly f_bar = reduce(IntPoly(std::move(diff)), p);
  return gcd_modp(f_bar, gcd_modp(h1_bar, h2_bar)).degree() == 0;
}

bool dedekind_prime_ok(const IntPoly& T, const Int& p, std::uint64_t seed) {
  if (sgn(p) <= 0 || !is_prime(p)) throw DomainError("dedekind: " + p.get_str() + " is not prime");
  require_monic_irreducible(T, seed);
  return dedekind_test(T, p, seed);
}

MonogenicVerdict monogenic_generic_irreducible(const IntPoly& T, const Budgets& budgets) {
  MonogenicVerdict v;
  if (T.degree() < 2) {
    v.status = MonogenicStatus::Monogenic;
    return v;
  }
  const PrimeFactorization fac = factorize(discriminant(T), budgets);
  for (const auto& [p, e] : fac.factors) {
    // p^2 must divide disc(T) for p to divide the index.
    if (e < 2) continue;
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 63) {
      v.status = MonogenicStatus::Unknown;
      v.unfactored = p;
      return v;
    }
    const bool ok = dedekind_test(T, p, budgets.seed);
    v.checked_primes.push_back({p, ok});
    if (!ok) {
      v.status = MonogenicStatus::NotMonogenic;
      v.witness_prime = p;
      return v;
    }
  }
  if (!fac.complete) {
    v.status = MonogenicStatus::Unknown;
    v.unfactored = fac.cofactor;
    return v;
  }
  v.status = MonogenicStatus::Monogenic;
  return v;
}

MonogenicVerdict is_monogenic_generic(const IntPoly& T, const Budgets& budgets) {
  require_monic_irreducible(T, budgets.seed);
  return monogenic_generic_irreducible(T, budgets);
}

IntPoly jly_poly(const Int& a, const Int& b) {
  return IntPoly(std::vector<Int>{b, 0, a * a, 0, 2 * a, 0, 1});
}

IntPoly jkk_poly(const Int& a, const Int& b) {
  return IntPoly(std::vector<Int>{a, 0, 2 * a * b, 0, a * b * b, 0, 1});
}

std::optional<std::pair<Int, Int>> match_jly(const IntPoly& p) {
  if (p.degree() != 6 || !p.is_monic() || p.coeff(1) != 0 || p.coeff(3) != 0 || p.coeff(5) != 0) {
    return std::nullopt;
  }
  const Int c4 = p.coeff(4);
  if (!mpz_even_p(c4.get_mpz_t())) return std::nullopt;
  const Int a = c4 / 2;
  if (p.coeff(2) != a * a) return std::nullopt;
  return std::make_pair(a, p.coeff(0));
}

std::optional<std::pair<Int, Int>> match_jkk(const IntPoly& p) {
  if (p.degree() != 6 || !p.is_monic() || p.coeff(1) != 0 || p.coeff(3) != 0 || p.coeff(5) != 0) {
    return std::nullopt;
  }
  const Int a = p.coeff(0);
  if (a == 0) return std::nullopt;
  const Int two_a = 2 * a;
  if (!divides(two_a, p.coeff(2))) return std::nullopt;
  const Int b = p.coeff(2) / two_a;
  if (jkk_poly(a, b) != p) return std::nullopt;
  return std::make_pair(a, b);
}

Int jly_discriminant(const Int& a, const Int& b) {
  const Int delta = 4 * a * a * a - 27 * b;
  return -64 * b * b * b * delta * delta;
}

Int jkk_discriminant(const Int& a, const Int& b) {
  const Int delta = 4 * a * b * b * b - 27;
  return -64 * ipow(a, 5) * delta * delta;
}

namespace detail {

Int jly_branch2_printed(const Int& a, const Int& b, unsigned p) {
  const Int pe = p;
  const Int b1 = 2 * a / pe;
  const Int c1 = (b + ipow(-b, p)) / pe;
  const Int b1b = b1 * b;
  return b1 * (b1b * b1b * b1b + b * c1 * c1 * c1);
}

Int jly_branch2_factored(const Int& a, const Int& b, unsigned p) {
  const Int pe = p;
  const Int b1 = 2 * a / pe;
  const Int c1 = (b + ipow(-b, p)) / pe;
  return b1 * b * (b1 * b1 * b1 * b * b + c1 * c1 * c1);
}

}  // namespace detail

MonogenicVerdict jly_check(const Int& a, const Int& b, const Budgets& budgets) {
  require_monic_irreducible(jly_poly(a, b), budgets.seed);
  const Int delta = 4 * a * a * a - 27 * b;

  std::set<Int> primes{Int(2)};
  Int unfactored = collect_primes(b, budgets, primes);
  unfactored *= collect_primes(delta, budgets, primes);

  return run_prime_tests(primes, unfactored, [&](const Int& p) {
    if (divides(p, b)) return !divides(p * p, b);
    if (divides(p, a)) {
      // Only p in {2, 3} reach this branch; p^j || 6 gives j = 1.
      const unsigned pj = static_cast<unsigned>(to_u64(p));
      const Int b1 = 2 * a / p;
      const Int c1 = (b + ipow(-b, pj)) / p;
      if (divides(p, b1) && !divides(p, c1)) return true;
      return !divides(p, detail::jly_branch2_printed(a, b, pj));
    }
    if (p == 2) return mpz_fdiv_ui(b.get_mpz_t(), 4) == 1;
    return !divides(p * p, delta);
  });
}

MonogenicVerdict jkk_check(const Int& a, const Int& b, const Budgets& budgets) {
  require_monic_irreducible(jkk_poly(a, b), budgets.seed);
  const Int delta = 4 * a * b * b * b - 27;

  std::set<Int> primes{Int(2)};
  Int unfactored = collect_primes(a, budgets, primes);
  unfactored *= collect_primes(delta, budgets, primes);

  return run_prime_tests(primes, unfactored, [&](const Int& p) {
    if (divides(p, a)) return !divides(p * p, a);
    if (divides(p, b)) {
      const unsigned pj = static_cast<unsigned>(to_u64(p));
      const Int b1 = 2 * a * b / p;
      const Int c1 = (a + ipow(-a, pj)) / p;
      if (divides(p, b1) && !divides(p, c1)) return true;
      return !divides(p, b1 * (-c1 * c1 * c1 + a * b1 * b1 * b1));
    }
    if (p == 2) return mpz_fdiv_ui(a.get_mpz_t(), 4) == 1;
    return !divides(p * p, delta);
  });
}

}  // namespace sexticlab
