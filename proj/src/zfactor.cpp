#include "sexticlab/zfactor.hpp"

#include <algorithm>
#include <set>

#include "sexticlab/error.hpp"
#include "sexticlab/polymodp.hpp"

namespace sexticlab {

namespace {

constexpr int kMaxFactorDegree = 12;
constexpr std::size_t kFastPathPrimes = 25;
constexpr std::size_t kLiftingPrimeScan = 5000;

IntPoly mod_coeffs(const IntPoly& f, const Int& m) {
  std::vector<Int> c = f.coeffs();
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly balanced(const IntPoly& f, const Int& m) {
  const Int half = m / 2;
  std::vector<Int> c = f.coeffs();
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

IntPoly exact_scalar_div(const IntPoly& f, const Int& d) {
  std::vector<Int> c = f.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(c));
}

// Lifts target == g * h (mod q) to (mod q^k) with g, h monic.
std::pair<IntPoly, IntPoly> hensel_lift_pair(const IntPoly& target, const ModPoly& g0, const ModPoly& h0,
                                             unsigned k) {
  const std::uint64_t q = g0.modulus();
  const ExtGcd bez = ext_gcd_modp(g0, h0);
  if (!bez.g.is_one()) throw DomainError("hensel lift: factors are not coprime mod q");
  IntPoly g = lift(g0);
  IntPoly h = lift(h0);
  Int m = from_u64(q);
  for (unsigned j = 1; j < k; ++j) {
    const IntPoly err = exact_scalar_div(target - g * h, m);
    const ModPoly e = reduce(err, q);
    const ModPoly dg = rem(bez.t * e, g0);
    const ModPoly dh = rem(bez.s * e, h0);
    g += lift(dg) * m;
    h += lift(dh) * m;
    m *= q;
  }
  return {g, h};
}

std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<ModPoly>& factors, unsigned k) {
  const std::uint64_t q = factors.front().modulus();
  std::vector<IntPoly> lifted;
  IntPoly target = f;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ModPoly rest = ModPoly::constant(q, 1);
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = rest * factors[j];
    auto [g, h] = hensel_lift_pair(target, factors[i], rest, k);
    lifted.push_back(std::move(g));
    target = std::move(h);
  }
  lifted.push_back(std::move(target));
  return lifted;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors of a monic squarefree f with deg f >= 1.
std::vector<IntPoly> zassenhaus(const IntPoly& f, std::uint64_t seed) {
  if (f.degree() <= 1) return {f};
  const std::uint64_t q = choose_lifting_prime(f);
  const auto modular = factor_modp(reduce(f, q), seed);
  if (modular.size() == 1) return {f};

  std::vector<ModPoly> local;
  for (const auto& mf : modular) local.push_back(mf.factor);

  const Int bound = 2 * mignotte_bound(f);
  unsigned k = 1;
  Int modulus = from_u64(q);
  while (modulus <= bound) {
    modulus *= q;
    ++k;
  }
  std::vector<IntPoly> lifted = hensel_lift(f, local, k);

  std::vector<IntPoly> found;
  IntPoly rest = f;
  std::vector<IntPoly> pool = std::move(lifted);
  for (std::size_t s = 1; 2 * s <= pool.size();) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      IntPoly prod{1};
      for (auto i : idx) prod = mod_coeffs(prod * pool[i], modulus);
      const IntPoly cand = balanced(prod, modulus);
      if (cand.coeff(0) != 0 && !mpz_divisible_p(rest.coeff(0).get_mpz_t(), cand.coeff(0).get_mpz_t())) continue;
      auto [quot, r] = divmod_monic(rest, cand);
      if (!r.is_zero()) continue;
      found.push_back(cand);
      rest = quot;
      std::vector<IntPoly> keep;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(pool[i]);
      }
      pool = std::move(keep);
      hit = true;
      break;
    } while (next_combination(idx, pool.size()));
    if (!hit) ++s;
  }
  if (rest.degree() > 0) found.push_back(rest);
  return found;
}

// Yun's squarefree decomposition of a monic f; pairs (part, multiplicity).
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  const IntPoly df = derivative(f);
  const IntPoly a0 = gcd(f, df);
  IntPoly b = divmod_monic(f, a0).first;
  IntPoly c = divmod_monic(df, a0).first;
  IntPoly d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    const IntPoly a = gcd(b, d);
    b = divmod_monic(b, a).first;
    c = divmod_monic(d, a).first;
    d = c - derivative(b);
    if (a.degree() > 0) out.emplace_back(a, i);
  }
  return out;
}

bool zfactor_less(const ZFactor& a, const ZFactor& b) {
  if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
  return poly_less(a.factor, b.factor);
}

}  // namespace

Int mignotte_bound(const IntPoly& p) {
  Int norm2 = 0;
  for (const auto& c : p.coeffs()) norm2 += c * c;
  Int root = isqrt(norm2);
  if (root * root < norm2) root += 1;
  mpz_mul_2exp(root.get_mpz_t(), root.get_mpz_t(), static_cast<mp_bitcnt_t>(std::max(p.degree(), 0)));
  return root;
}

std::uint64_t choose_lifting_prime(const IntPoly& p) {
  // A squarefree input has finitely many bad primes, all dividing its
  // discriminant, so a long enough scan always succeeds.
  static const std::vector<std::uint32_t> primes = first_primes(kLiftingPrimeScan);
  for (std::size_t i = 1; i < primes.size(); ++i) {
    const std::uint64_t q = primes[i];
    if (mpz_divisible_ui_p(p.leading().get_mpz_t(), q)) continue;
    if (is_squarefree_modp(reduce(p, q))) return q;
  }
  throw Unsupported("choose_lifting_prime: no suitable prime found");
}

std::vector<Int> rational_roots(const IntPoly& p, const Budgets& budgets) {
  if (p.is_zero()) throw DomainError("rational_roots: zero polynomial");
  std::set<Int> roots;
  std::size_t shift = 0;
  while (p.coeff(shift) == 0) ++shift;
  if (shift > 0) roots.insert(Int(0));
  IntPoly q(std::vector<Int>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), p.coeffs().end()));
  if (q.degree() < 1) return {roots.begin(), roots.end()};

  const PrimeFactorization fac = factorize(q.coeff(0), budgets);
  if (!fac.complete) {
    if (!q.is_monic()) throw Unsupported("rational_roots: constant term could not be factored");
    for (const auto& zf : factor_q(q, budgets.seed)) {
      if (zf.factor.degree() == 1) roots.insert(-zf.factor.coeff(0));
    }
    return {roots.begin(), roots.end()};
  }
  std::vector<Int> divisors{1};
  for (const auto& [prime, e] : fac.factors) {
    const std::size_t base = divisors.size();
    Int pk = 1;
    for (unsigned j = 1; j <= e; ++j) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  for (const auto& d : divisors) {
    if (eval(q, d) == 0) roots.insert(d);
    if (eval(q, -d) == 0) roots.insert(-d);
  }
  return {roots.begin(), roots.end()};
}

bool is_irreducible_q(const IntPoly& p, std::uint64_t seed) {
  if (p.degree() < 1) throw DomainError("is_irreducible_q: constant polynomial");
  if (!p.is_monic()) throw DomainError("is_irreducible_q: polynomial must be monic");
  if (p.degree() == 1) return true;
  const Int disc = discriminant(p);
  if (disc == 0) return false;
  for (std::uint32_t q : first_primes(kFastPathPrimes)) {
    if (mpz_divisible_ui_p(disc.get_mpz_t(), q)) continue;
    if (is_irreducible_modp(reduce(p, q))) return true;
  }
  const auto factors = factor_q(p, seed);
  return factors.size() == 1 && factors.front().multiplicity == 1;
}

std::vector<ZFactor> factor_q(const IntPoly& p, std::uint64_t seed) {
  if (p.is_zero() || !p.is_monic()) throw DomainError("factor_q: polynomial must be monic");
  if (p.degree() > kMaxFactorDegree) {
    throw Unsupported("factor_q: degree " + std::to_string(p.degree()) + " exceeds 12");
  }
  std::vector<ZFactor> out;
  std::size_t shift = 0;
  while (p.coeff(shift) == 0) ++shift;
  if (shift > 0) out.push_back({IntPoly::x(), static_cast<unsigned>(shift)});
  const IntPoly rest(std::vector<Int>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), p.coeffs().end()));
  if (rest.degree() >= 1) {
    for (const auto& [part, mult] : squarefree_decomposition(rest)) {
      for (auto& irr : zassenhaus(part, seed)) out.push_back({std::move(irr), mult});
    }
  }
  std::sort(out.begin(), out.end(), zfactor_less);
  return out;
}

}  // namespace sexticlab
