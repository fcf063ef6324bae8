#include "sexticlab/polymodp.hpp"

#include <algorithm>
#include <random>

#include "sexticlab/error.hpp"

namespace sexticlab {

namespace {

// Exhaustive equal-degree splitting is used while p^d stays below this.
constexpr std::uint64_t kExhaustiveSplitLimit = 4096;

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powm(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e > 0) {
    if (e & 1) r = mulm(r, b, p);
    b = mulm(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("modular inverse of zero");
  return powm(a, p - 2, p);
}

void check_same_modulus(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw DomainError("ModPoly modulus mismatch");
}

ModPoly exact_divide(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }

// u(x)^(1/p) for u with only x^(kp) terms (a^p == a in F_p).
ModPoly pth_root(const ModPoly& u) {
  const std::uint64_t p = u.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < u.coeffs().size(); i += static_cast<std::size_t>(p)) c.push_back(u.coeffs()[i]);
  return ModPoly(p, std::move(c));
}

void squarefree_parts(const ModPoly& f, unsigned scale, std::vector<ModFactor>& out) {
  ModPoly c = gcd_modp(f, derivative(f));
  ModPoly w = exact_divide(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd_modp(w, c);
    ModPoly z = exact_divide(w, y);
    if (z.degree() > 0) out.push_back({z, i * scale});
    ++i;
    w = y;
    c = exact_divide(c, y);
  }
  if (c.degree() > 0) {
    squarefree_parts(pth_root(c), scale * static_cast<unsigned>(f.modulus()), out);
  }
}

// Products of all irreducible factors of each degree d.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f) {
  const std::uint64_t p = f.modulus();
  const Int pe = from_u64(p);
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly rest = f;
  ModPoly h = ModPoly::x(p);
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, pe, rest);
    ModPoly g = gcd_modp(h - ModPoly::x(p), rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = exact_divide(rest, g);
      h = rem(h, rest);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

bool next_monic(std::vector<std::uint64_t>& c, std::uint64_t p) {
  // c holds the d low coefficients; the leading 1 is implicit.
  for (auto& v : c) {
    if (++v < p) return true;
    v = 0;
  }
  return false;
}

void split_exhaustive(ModPoly h, int d, std::vector<ModPoly>& out) {
  const std::uint64_t p = h.modulus();
  std::vector<std::uint64_t> low(static_cast<std::size_t>(d), 0);
  do {
    if (h.degree() == d) break;
    std::vector<std::uint64_t> full = low;
    full.push_back(1);
    ModPoly cand(p, std::move(full));
    auto [q, r] = divmod(h, cand);
    if (r.is_zero()) {
      out.push_back(cand);
      h = q;
    }
  } while (next_monic(low, p));
  if (h.degree() > 0) out.push_back(h);
}

void split_random(const ModPoly& h, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (h.degree() == d) {
    out.push_back(h);
    return;
  }
  const std::uint64_t p = h.modulus();
  Int exponent;
  if (p != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
  }
  for (;;) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(h.degree()));
    for (auto& v : c) v = rng() % p;
    ModPoly t(p, std::move(c));
    if (t.degree() < 1) continue;
    ModPoly probe(p);
    if (p == 2) {
      // trace map t + t^2 + ... + t^(2^(d-1))
      ModPoly term = t;
      probe = t;
      for (int i = 1; i < d; ++i) {
        term = rem(term * term, h);
        probe += term;
      }
    } else {
      probe = powmod(t, exponent, h) - ModPoly::constant(p, 1);
    }
    ModPoly g = gcd_modp(probe, h);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      split_random(g, d, rng, out);
      split_random(exact_divide(h, g), d, rng, out);
      return;
    }
  }
}

bool factor_less(const ModFactor& a, const ModFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& x = a.factor.coeffs();
  const auto& y = b.factor.coeffs();
  if (x != y) return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  return a.multiplicity < b.multiplicity;
}

}  // namespace

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= p_;
  normalize();
}

ModPoly ModPoly::constant(std::uint64_t p, std::uint64_t c) { return ModPoly(p, {c}); }

ModPoly ModPoly::x(std::uint64_t p) { return ModPoly(p, {0, 1}); }

void ModPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly& ModPoly::operator+=(const ModPoly& q) {
  check_same_modulus(*this, q);
  if (c_.size() < q.c_.size()) c_.resize(q.c_.size(), 0);
  for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] = addm(c_[i], q.c_[i], p_);
  normalize();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& q) {
  check_same_modulus(*this, q);
  if (c_.size() < q.c_.size()) c_.resize(q.c_.size(), 0);
  for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] = subm(c_[i], q.c_[i], p_);
  normalize();
  return *this;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  check_same_modulus(a, b);
  const std::uint64_t p = a.p_;
  if (a.is_zero() || b.is_zero()) return ModPoly(p);
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = addm(r[i + j], mulm(a.c_[i], b.c_[j], p), p);
  }
  return ModPoly(p, std::move(r));
}

ModPoly ModPoly::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> r = c_;
  for (auto& v : r) v = mulm(v, s % p_, p_);
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled(invm(c_.back(), p_));
}

ModPoly reduce(const IntPoly& f, const Int& p) {
  if (sgn(p) <= 0 || !is_prime(p)) throw DomainError("reduce: modulus " + p.get_str() + " is not prime");
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > 63) throw Unsupported("reduce: modulus exceeds 63 bits");
  const std::uint64_t q = to_u64(p);
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  Int r;
  for (const auto& v : f.coeffs()) {
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    c.push_back(to_u64(r));
  }
  return ModPoly(q, std::move(c));
}

ModPoly reduce(const IntPoly& f, std::uint64_t p) { return reduce(f, from_u64(p)); }

IntPoly lift(const ModPoly& u) {
  std::vector<Int> c;
  c.reserve(u.coeffs().size());
  for (auto v : u.coeffs()) c.push_back(from_u64(v));
  return IntPoly(std::move(c));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den) {
  check_same_modulus(num, den);
  if (den.is_zero()) throw DomainError("divmod: division by zero polynomial");
  const std::uint64_t p = num.modulus();
  if (num.degree() < den.degree()) return {ModPoly(p), num};
  std::vector<std::uint64_t> r = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  const std::uint64_t inv = invm(d.back(), p);
  std::vector<std::uint64_t> q(r.size() - dd, 0);
  for (std::size_t k = r.size(); k-- > dd;) {
    if (r[k] == 0) continue;
    const std::uint64_t t = mulm(r[k], inv, p);
    q[k - dd] = t;
    for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] = subm(r[k - dd + j], mulm(t, d[j], p), p);
  }
  return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly rem(const ModPoly& num, const ModPoly& den) { return divmod(num, den).second; }

ModPoly derivative(const ModPoly& u) {
  const std::uint64_t p = u.modulus();
  if (u.degree() < 1) return ModPoly(p);
  std::vector<std::uint64_t> d(u.coeffs().size() - 1);
  for (std::size_t i = 1; i < u.coeffs().size(); ++i) d[i - 1] = mulm(u.coeffs()[i], i % p, p);
  return ModPoly(p, std::move(d));
}

ModPoly gcd_modp(const ModPoly& u, const ModPoly& v) {
  check_same_modulus(u, v);
  ModPoly a = u;
  ModPoly b = v;
  while (!b.is_zero()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd_modp(const ModPoly& u, const ModPoly& v) {
  check_same_modulus(u, v);
  const std::uint64_t p = u.modulus();
  ModPoly r0 = u, r1 = v;
  ModPoly s0 = ModPoly::constant(p, 1), s1(p);
  ModPoly t0(p), t1 = ModPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const std::uint64_t inv = invm(r0.leading(), p);
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m) {
  const std::uint64_t p = m.modulus();
  if (sgn(e) < 0) throw DomainError("powmod: negative exponent");
  ModPoly result = rem(ModPoly::constant(p, 1), m);
  const ModPoly b = rem(base, m);
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(result * result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, m);
  }
  return result;
}

std::vector<ModFactor> factor_modp(const ModPoly& u, std::uint64_t seed) {
  if (u.is_zero()) throw DomainError("factor_modp: zero polynomial");
  const std::uint64_t p = u.modulus();
  const ModPoly f = u.monic();
  std::vector<ModFactor> out;
  if (f.degree() == 0) return out;

  std::vector<ModFactor> parts;
  squarefree_parts(f, 1, parts);

  std::uint64_t h = mix_seed(seed, p);
  for (auto c : f.coeffs()) h = mix_seed(h, c);
  std::mt19937_64 rng(h);

  for (const auto& [part, mult] : parts) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<ModPoly> irreducibles;
      std::uint64_t space = 1;
      bool small = true;
      for (int i = 0; i < d && small; ++i) {
        if (space > kExhaustiveSplitLimit / p) small = false;
        space *= p;
      }
      if (block.degree() == d) {
        irreducibles.push_back(block);
      } else if (small && space <= kExhaustiveSplitLimit) {
        split_exhaustive(block, d, irreducibles);
      } else {
        split_random(block, d, rng, irreducibles);
      }
      for (auto& g : irreducibles) out.push_back({std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

bool is_irreducible_modp(const ModPoly& u) {
  if (u.degree() < 1) throw DomainError("is_irreducible_modp: constant polynomial");
  const ModPoly f = u.monic();
  const int n = f.degree();
  if (n == 1) return true;
  const std::uint64_t p = f.modulus();
  const Int pe = from_u64(p);
  const ModPoly x = ModPoly::x(p);

  // frob[i] = x^(p^i) mod f
  std::vector<ModPoly> frob{rem(x, f)};
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), pe, f));
  if (frob[static_cast<std::size_t>(n)] != rem(x, f)) return false;

  for (std::uint32_t q : primes_up_to(static_cast<std::uint32_t>(n))) {
    if (n % static_cast<int>(q) != 0) continue;
    const ModPoly g = gcd_modp(frob[static_cast<std::size_t>(n / static_cast<int>(q))] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

bool is_squarefree_modp(const ModPoly& u) {
  if (u.is_zero()) throw DomainError("is_squarefree_modp: zero polynomial");
  if (u.degree() == 0) return true;
  return gcd_modp(u, derivative(u)).degree() == 0;
}

}  // namespace sexticlab
