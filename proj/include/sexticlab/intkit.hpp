#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sexticlab {

using Int = mpz_class;

/// Work limits for integer factorization. The seed only steers Pollard rho
/// starting points; it never changes a verdict.
struct Budgets {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_budget = std::uint64_t{1} << 20;
  std::uint64_t seed = 0;
};

/// Signed, possibly partial factorization:
/// sign * cofactor * prod(p^e) == input, primes strictly increasing,
/// complete iff cofactor == 1.
struct PrimeFactorization {
  int sign = 1;
  std::vector<std::pair<Int, unsigned>> factors;
  Int cofactor = 1;
  bool complete = true;

  /// Reassembles the factored integer.
  Int value() const;
  /// Exponent of p among the factored primes (0 if absent).
  unsigned exponent_of(const Int& p) const;
};

enum class Tristate { False, True, Unknown };

std::string to_string(Tristate t);

/// floor(sqrt(n)); throws DomainError for n < 0.
Int isqrt(const Int& n);

/// n == k^2 for some integer k >= 0. Negative n is never a square.
bool is_square(const Int& n);

/// Deterministic for |n| < 2^64. Beyond that a strong probable-prime test
/// (BPSW) is used, which has no known counterexample but is not a proof.
bool is_prime(const Int& n);
bool is_prime_u64(std::uint64_t n);

/// Trial division up to budgets.trial_bound, then primality testing and
/// Brent/Pollard rho within budgets.rho_budget iterations. Whatever cannot
/// be split is returned as the cofactor with complete = false.
/// Throws DomainError for n == 0.
PrimeFactorization factorize(const Int& n, const Budgets& budgets = {});

/// False iff a repeated prime factor is found; Unknown when the factorization
/// is incomplete and no square factor was exhibited.
Tristate is_squarefree(const Int& n, const Budgets& budgets = {});

/// Largest e with p^e | n. Throws DomainError if n == 0 or p is not prime.
unsigned valuation(const Int& n, const Int& p);

/// Primes up to `limit` (inclusive), by sieve.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// The k-th prime, 0-based (first_primes(3) == {2,3,5}).
std::vector<std::uint32_t> first_primes(std::size_t count);

/// Lossless conversions for values known to fit.
bool fits_u64(const Int& n);
std::uint64_t to_u64(const Int& n);
Int from_u64(std::uint64_t v);
Int from_i64(std::int64_t v);
bool fits_i64(const Int& n);
std::int64_t to_i64(const Int& n);

/// Deterministic 64-bit mixer used to derive per-call RNG seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value);
std::uint64_t hash_int(const Int& n);

}  // namespace sexticlab
