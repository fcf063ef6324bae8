#include "sexticlab/intkit.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "sexticlab/error.hpp"

namespace sexticlab {

static_assert(sizeof(unsigned long) == 8, "gmpxx ui conversions assume LP64");

namespace {

constexpr std::uint32_t kCachedSieveLimit = 1'000'000;
// Primes below this are always stripped before primality/rho work starts.
constexpr std::uint32_t kQuickTrialLimit = 1000;

const std::vector<std::uint32_t>& cached_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kCachedSieveLimit);
  return primes;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

struct FactorContext {
  const Budgets& budgets;
  const std::vector<std::uint32_t>& primes;
  std::uint64_t rho_left;
  std::mt19937_64 rng;
  std::map<Int, unsigned> found;
  Int cofactor = 1;
};

// Brent's variant of Pollard rho; returns a nontrivial divisor or nothing
// when the iteration budget runs out.
std::optional<Int> brent_rho(const Int& n, FactorContext& ctx) {
  if (mpz_even_p(n.get_mpz_t())) return Int(2);
  constexpr std::uint64_t kBatch = 128;
  const Int n_minus_one = n - 1;
  while (ctx.rho_left > 0) {
    Int c, y, x, ys, q = 1, g = 1, diff;
    mpz_fdiv_r(c.get_mpz_t(), from_u64(ctx.rng()).get_mpz_t(), n_minus_one.get_mpz_t());
    c += 1;
    mpz_fdiv_r(y.get_mpz_t(), from_u64(ctx.rng()).get_mpz_t(), n.get_mpz_t());
    auto step = [&](Int& v) {
      v = v * v + c;
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    std::uint64_t r = 1;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r && ctx.rho_left > 0; ++i, --ctx.rho_left) step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t batch = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < batch && ctx.rho_left > 0; ++i, --ctx.rho_left) {
          step(y);
          diff = abs(x - y);
          q *= diff;
          mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
      } while (k < r && g == 1 && ctx.rho_left > 0);
      r *= 2;
    } while (g == 1 && ctx.rho_left > 0);

    if (g == n) {
      // The batched product overshot; replay the last batch one step at a time.
      do {
        step(ys);
        diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

// Strips every prime in `primes` that lies in (from, to] from m.
void trial_divide(Int& m, std::uint64_t from, std::uint64_t to, FactorContext& ctx) {
  auto it = std::upper_bound(ctx.primes.begin(), ctx.primes.end(),
                             static_cast<std::uint32_t>(std::min<std::uint64_t>(from, UINT32_MAX)));
  for (; it != ctx.primes.end() && *it <= to; ++it) {
    const std::uint64_t p = *it;
    if (fits_u64(m)) {
      std::uint64_t v = to_u64(m);
      if (p * p > v) break;
      if (v % p != 0) continue;
      unsigned e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      ctx.found[Int(p)] += e;
      m = from_u64(v);
      continue;
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = static_cast<unsigned>(
          mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Int(p).get_mpz_t()));
      ctx.found[Int(p)] += e;
    }
  }
}

// m has no prime factor <= trialed_to.
void split(const Int& m, std::uint64_t trialed_to, FactorContext& ctx) {
  if (m == 1) return;
  const Int next = trialed_to + 1;
  if (m < next * next || is_prime(m)) {
    ctx.found[m] += 1;
    return;
  }
  if (mpz_perfect_power_p(m.get_mpz_t())) {
    const auto bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    Int root;
    for (unsigned long k = 2; k <= bits; ++k) {
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
        for (unsigned long i = 0; i < k; ++i) split(root, trialed_to, ctx);
        return;
      }
    }
  }
  if (auto d = brent_rho(m, ctx)) {
    split(*d, trialed_to, ctx);
    split(Int(m / *d), trialed_to, ctx);
    return;
  }
  if (trialed_to < ctx.budgets.trial_bound) {
    Int rest = m;
    trial_divide(rest, trialed_to, ctx.budgets.trial_bound, ctx);
    if (rest != m) {
      split(rest, ctx.budgets.trial_bound, ctx);
      return;
    }
    // Trial division ran to sqrt(m) without a hit: m is prime.
    const Int bound = from_u64(ctx.budgets.trial_bound);
    if (bound * bound >= m) {
      ctx.found[m] += 1;
      return;
    }
  }
  ctx.cofactor *= m;
}

}  // namespace

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

Int PrimeFactorization::value() const {
  Int v = cofactor * sign;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

unsigned PrimeFactorization::exponent_of(const Int& p) const {
  for (const auto& [q, e] : factors) {
    if (q == p) return e;
  }
  return 0;
}

bool fits_u64(const Int& n) { return sgn(n) >= 0 && mpz_fits_ulong_p(n.get_mpz_t()); }

std::uint64_t to_u64(const Int& n) { return mpz_get_ui(n.get_mpz_t()); }

Int from_u64(std::uint64_t v) {
  Int r;
  mpz_set_ui(r.get_mpz_t(), v);
  return r;
}

Int from_i64(std::int64_t v) {
  Int r;
  mpz_set_si(r.get_mpz_t(), v);
  return r;
}

bool fits_i64(const Int& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

std::int64_t to_i64(const Int& n) { return mpz_get_si(n.get_mpz_t()); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + value + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_int(const Int& n) {
  std::uint64_t h = static_cast<std::uint64_t>(sgn(n) + 1);
  const std::size_t limbs = mpz_size(n.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h = mix_seed(h, mpz_getlimbn(n.get_mpz_t(), static_cast<mp_size_t>(i)));
  }
  return h;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
  const auto& all = cached_primes();
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(std::min(count, all.size()))};
}

Int isqrt(const Int& n) {
  if (sgn(n) < 0) throw DomainError("isqrt: negative argument " + n.get_str());
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is deterministic for every n < 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL,
                          1795265022ULL}) {
    if (!miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  const Int m = abs(n);
  if (fits_u64(m)) return is_prime_u64(to_u64(m));
  return mpz_probab_prime_p(m.get_mpz_t(), 25) != 0;
}

PrimeFactorization factorize(const Int& n, const Budgets& budgets) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");

  std::vector<std::uint32_t> extended;
  if (budgets.trial_bound > kCachedSieveLimit) {
    extended = primes_up_to(static_cast<std::uint32_t>(
        std::min<std::uint64_t>(budgets.trial_bound, UINT32_MAX - 1)));
  }
  FactorContext ctx{budgets, extended.empty() ? cached_primes() : extended,
                    budgets.rho_budget, std::mt19937_64(mix_seed(budgets.seed, hash_int(abs(n)))), {}, 1};

  Int m = abs(n);
  const std::uint64_t quick = std::min<std::uint64_t>(kQuickTrialLimit, budgets.trial_bound);
  trial_divide(m, 1, quick, ctx);
  split(m, quick, ctx);

  PrimeFactorization result;
  result.sign = sgn(n);
  result.factors.assign(ctx.found.begin(), ctx.found.end());
  result.cofactor = ctx.cofactor;
  result.complete = ctx.cofactor == 1;
  return result;
}

Tristate is_squarefree(const Int& n, const Budgets& budgets) {
  const PrimeFactorization f = factorize(n, budgets);
  for (const auto& [p, e] : f.factors) {
    if (e >= 2) return Tristate::False;
  }
  if (f.complete) return Tristate::True;
  if (mpz_perfect_power_p(f.cofactor.get_mpz_t())) return Tristate::False;
  return Tristate::Unknown;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw DomainError("valuation: n must be nonzero");
  if (sgn(p) <= 0 || !is_prime(p)) throw DomainError("valuation: " + p.get_str() + " is not prime");
  Int rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace sexticlab
