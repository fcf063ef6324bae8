#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sexticlab/error.hpp"
#include "sexticlab/polymodp.hpp"

using namespace sexticlab;

namespace {

ModPoly mp(std::uint64_t p, std::initializer_list<std::uint64_t> c) { return ModPoly(p, std::vector<std::uint64_t>(c)); }

// x^(p^k) mod u
ModPoly frobenius(const ModPoly& u, unsigned k) {
  Int e = 1;
  for (unsigned i = 0; i < k; ++i) e *= Int(static_cast<unsigned long>(u.modulus()));
  return powmod(ModPoly::x(u.modulus()), e, u);
}

}  // namespace

TEST_SUITE("polymodp") {

TEST_CASE("reduce") {
  // x^6+(3n+4)x^4+(3n+1)x^2-1 for even n
  for (long n : {-4L, 0L, 2L, 34L}) {
    const IntPoly f(std::vector<Int>{-1, 0, 3 * n + 1, 0, 3 * n + 4, 0, 1});
    CHECK(reduce(f, std::uint64_t{2}) == mp(2, {1, 0, 1, 0, 0, 0, 1}));
  }
  CHECK(reduce(IntPoly{}, std::uint64_t{5}).is_zero());
  // x^2(x^2+a)^2+a^2 with a = 9n^2+3n+7
  for (long n = 1; n <= 5; ++n) {
    const Int a = 9 * n * n + 3 * n + 7;
    const IntPoly f(std::vector<Int>{a * a, 0, a * a, 0, 2 * a, 0, 1});
    CHECK(reduce(f, std::uint64_t{3}) == mp(3, {1, 0, 1, 0, 2, 0, 1}));
  }
  CHECK(reduce(IntPoly{-1, -7}, std::uint64_t{5}) == mp(5, {4, 3}));
  CHECK_THROWS_AS(reduce(IntPoly{1, 1}, std::uint64_t{4}), DomainError);
  CHECK_THROWS_AS(reduce(IntPoly{1, 1}, Int("340282366920938463463374607431768211507")), Unsupported);
}

TEST_CASE("lift keeps residues in [0, p)") {
  CHECK(lift(mp(7, {6, 0, 3})) == IntPoly{6, 0, 3});
}

TEST_CASE("gcd_modp") {
  CHECK(gcd_modp(mp(5, {4, 0, 1}), mp(5, {4, 1})) == mp(5, {4, 1}));
  const ModPoly u = mp(7, {3, 1}) * mp(7, {3, 1}) * mp(7, {6, 1});
  CHECK(gcd_modp(u, ModPoly::constant(7, 1)).is_one());
  CHECK(gcd_modp(u, mp(7, {3, 1}) * mp(7, {5, 1})) == mp(7, {3, 1}));
  CHECK(gcd_modp(ModPoly(7), mp(7, {2, 2})) == mp(7, {1, 1}));
  CHECK_THROWS_AS(gcd_modp(mp(5, {1, 1}), mp(7, {1, 1})), DomainError);
}

TEST_CASE("extended gcd") {
  const ModPoly u = mp(11, {1, 2, 3, 1}), v = mp(11, {5, 0, 1});
  const ExtGcd e = ext_gcd_modp(u, v);
  CHECK(e.s * u + e.t * v == e.g);
  CHECK(e.g == gcd_modp(u, v));
}

TEST_CASE("factor_modp examples") {
  const auto a = factor_modp(mp(2, {1, 0, 1, 0, 0, 0, 1}));
  REQUIRE(a.size() == 1);
  CHECK(a[0].factor == mp(2, {1, 1, 0, 1}));
  CHECK(a[0].multiplicity == 2);

  const ModPoly irr = mp(3, {1, 0, 1, 0, 2, 0, 1});
  const auto b = factor_modp(irr);
  REQUIRE(b.size() == 1);
  CHECK(b[0].factor == irr);
  CHECK(b[0].multiplicity == 1);

  const auto c = factor_modp(mp(5, {0, 0, 1}));
  REQUIRE(c.size() == 1);
  CHECK(c[0].factor == mp(5, {0, 1}));
  CHECK(c[0].multiplicity == 2);

  CHECK_THROWS_AS(factor_modp(ModPoly(5)), DomainError);
}

TEST_CASE("factor_modp normalizes non-monic input and sorts") {
  // 3 (x+1)(x+2)^2 (x^2+2) over F_5 (x^2+2 irreducible mod 5)
  const ModPoly u = (mp(5, {1, 1}) * mp(5, {2, 1}) * mp(5, {2, 1}) * mp(5, {2, 0, 1})).scaled(3);
  const auto f = factor_modp(u);
  REQUIRE(f.size() == 3);
  CHECK(f[0].factor == mp(5, {1, 1}));
  CHECK(f[1].factor == mp(5, {2, 1}));
  CHECK(f[1].multiplicity == 2);
  CHECK(f[2].factor == mp(5, {2, 0, 1}));
}

TEST_CASE("p-th powers in characteristic p") {
  // (x^2+x+1)^3 (x+1)^6 over F_3
  const ModPoly a = mp(3, {1, 1, 1}), b = mp(3, {1, 1});
  ModPoly u = a * a * a;
  for (int i = 0; i < 6; ++i) u = u * b;
  const auto f = factor_modp(u);
  unsigned total = 0;
  ModPoly prod = ModPoly::constant(3, 1);
  for (const auto& [g, m] : f) {
    for (unsigned i = 0; i < m; ++i) prod = prod * g;
    total += m * static_cast<unsigned>(g.degree());
  }
  CHECK(prod == u);
  CHECK(total == 12);
}

TEST_CASE("factors are irreducible by the Frobenius test") {
  std::mt19937_64 rng(21);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 31ULL, 65537ULL, 1000000007ULL}) {
    for (int i = 0; i < 40; ++i) {
      std::vector<std::uint64_t> c(2 + rng() % 9);
      for (auto& v : c) v = rng() % p;
      c.back() = 1;
      for (const auto& [f, m] : factor_modp(ModPoly(p, c), 5)) {
        const unsigned d = static_cast<unsigned>(f.degree());
        REQUIRE(frobenius(f, d) == rem(ModPoly::x(p), f));
        for (unsigned e = 1; e < d; ++e) REQUIRE_FALSE(frobenius(f, e) == rem(ModPoly::x(p), f));
      }
    }
  }
}

TEST_CASE("factor_modp output does not depend on the seed") {
  std::mt19937_64 rng(22);
  const std::uint64_t p = 1000000007ULL;
  for (int i = 0; i < 30; ++i) {
    std::vector<std::uint64_t> c(9);
    for (auto& v : c) v = rng() % p;
    c.back() = 1;
    const ModPoly u(p, c);
    const auto a = factor_modp(u, 1), b = factor_modp(u, 999);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].factor == b[k].factor);
  }
}

TEST_CASE("is_irreducible_modp examples") {
  CHECK(is_irreducible_modp(mp(3, {1, 0, 2, 0, 1, 0, 1})));
  CHECK_FALSE(is_irreducible_modp(mp(2, {1, 0, 1})));
  CHECK(is_irreducible_modp(mp(2, {1, 1, 0, 1})));
  CHECK_THROWS_AS(is_irreducible_modp(ModPoly::constant(5, 3)), DomainError);
}

TEST_CASE("is_irreducible_modp matches brute force on every small monic polynomial") {
  for (auto [p, max_deg] : {std::pair{2ULL, 7}, std::pair{3ULL, 5}, std::pair{5ULL, 4}, std::pair{7ULL, 3}}) {
    for (int d = 1; d <= max_deg; ++d) {
      std::vector<std::uint64_t> c(d + 1, 0);
      c[d] = 1;
      for (;;) {
        const ModPoly u(p, c);
        REQUIRE(is_irreducible_modp(u) == oracle::irreducible_modp_bruteforce(c, p));
        const auto f = factor_modp(u);
        REQUIRE((f.size() == 1 && f[0].multiplicity == 1) == is_irreducible_modp(u));
        int i = 0;
        while (i < d && ++c[i] == p) c[i++] = 0;
        if (i == d) break;
      }
    }
  }
}

TEST_CASE("is_squarefree_modp") {
  CHECK_FALSE(is_squarefree_modp(mp(2, {1, 0, 1, 0, 0, 0, 1})));
  CHECK(is_squarefree_modp(mp(3, {0, 1})));
  CHECK(is_squarefree_modp(mp(3, {1, 0, 1, 0, 2, 0, 1})));
  CHECK_FALSE(is_squarefree_modp(mp(3, {0, 0, 0, 1})));
}

}  // TEST_SUITE
