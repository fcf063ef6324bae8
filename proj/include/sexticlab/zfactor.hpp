#pragma once

#include <cstdint>
#include <vector>

#include "sexticlab/polyz.hpp"

namespace sexticlab {

struct ZFactor {
  IntPoly factor;
  unsigned multiplicity;
};

/// Distinct integer roots in increasing order. Throws DomainError on zero input.
std::vector<Int> rational_roots(const IntPoly& p, const Budgets& budgets = {});

/// Irreducibility over Q of a monic polynomial. Tries a mod-q certificate
/// over the first 25 primes not dividing the discriminant, then falls back
/// to factor_q. Throws DomainError if p is not monic or constant.
bool is_irreducible_q(const IntPoly& p, std::uint64_t seed = 0);

/// Complete factorization of a monic polynomial of degree <= 12 over Q
/// (equivalently Z, by Gauss's lemma), sorted by degree then coefficients.
/// Throws DomainError when p is not monic, Unsupported when deg p > 12.
std::vector<ZFactor> factor_q(const IntPoly& p, std::uint64_t seed = 0);

/// Smallest prime q >= 3 among the first 50 (then onward) with p mod q squarefree.
std::uint64_t choose_lifting_prime(const IntPoly& p);

/// 2^n * ceil(||p||_2), a bound on the coefficients of any factor of p.
Int mignotte_bound(const IntPoly& p);

}  // namespace sexticlab
