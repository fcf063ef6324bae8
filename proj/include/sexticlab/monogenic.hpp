#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sexticlab/polyz.hpp"

namespace sexticlab {

enum class MonogenicStatus { Monogenic, NotMonogenic, Unknown };

std::string to_string(MonogenicStatus s);

struct PrimeCheck {
  Int prime;
  bool passed;
};

/// Monogenic: every checked prime passed and the discriminant was fully
/// factored. NotMonogenic: witness_prime divides the index (it is the first
/// failing entry of checked_primes). Unknown: all checked primes passed but
/// `unfactored` is left over.
struct MonogenicVerdict {
  MonogenicStatus status = MonogenicStatus::Unknown;
  std::optional<Int> witness_prime;
  std::optional<Int> unfactored;
  std::vector<PrimeCheck> checked_primes;
};

/// Dedekind's criterion: true iff p does not divide [Z_K : Z[theta]] for a
/// root theta of the monic irreducible T. Throws DomainError when T is not
/// monic irreducible or p is not prime.
bool dedekind_prime_ok(const IntPoly& T, const Int& p, std::uint64_t seed = 0);

/// dedekind_prime_ok without the irreducibility check.
bool dedekind_test(const IntPoly& T, const Int& p, std::uint64_t seed = 0);

/// Runs Dedekind's criterion at every prime whose square divides disc(T).
MonogenicVerdict is_monogenic_generic(const IntPoly& T, const Budgets& budgets = {});

/// Same, for a T already known to be monic and irreducible.
MonogenicVerdict monogenic_generic_irreducible(const IntPoly& T, const Budgets& budgets = {});

/// x^6 + 2a x^4 + a^2 x^2 + b  (= x^2 (x^2 + a)^2 + b).
IntPoly jly_poly(const Int& a, const Int& b);
/// x^6 + a b^2 x^4 + 2ab x^2 + a  (= x^6 + a (b x^2 + 1)^2).
IntPoly jkk_poly(const Int& a, const Int& b);

/// Recovers (a, b) when p has the jly_poly / jkk_poly shape.
std::optional<std::pair<Int, Int>> match_jly(const IntPoly& p);
std::optional<std::pair<Int, Int>> match_jkk(const IntPoly& p);

/// Closed-form discriminants: -2^6 b^3 (4a^3 - 27b)^2 and -2^6 a^5 (4ab^3 - 27)^2.
Int jly_discriminant(const Int& a, const Int& b);
Int jkk_discriminant(const Int& a, const Int& b);

/// Prime-by-prime index test for jly_poly(a, b). Throws DomainError if the
/// polynomial is reducible.
MonogenicVerdict jly_check(const Int& a, const Int& b, const Budgets& budgets = {});

/// Prime-by-prime index test for jkk_poly(a, b). Throws DomainError if the
/// polynomial is reducible.
MonogenicVerdict jkk_check(const Int& a, const Int& b, const Budgets& budgets = {});

namespace detail {
// The p in {2,3}, p | a, p !| b branch of the JLY test, in the printed form
// b1 ((b1 b)^3 + b c1^3) and in the factored form b1 b (b1^3 b^2 + c1^3).
Int jly_branch2_printed(const Int& a, const Int& b, unsigned p);
Int jly_branch2_factored(const Int& a, const Int& b, unsigned p);
}  // namespace detail

}  // namespace sexticlab
