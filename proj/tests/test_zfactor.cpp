#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sexticlab/error.hpp"
#include "sexticlab/polymodp.hpp"
#include "sexticlab/zfactor.hpp"

using namespace sexticlab;

namespace {

std::vector<IntPoly> factors_only(const std::vector<ZFactor>& f) {
  std::vector<IntPoly> out;
  for (const auto& z : f) {
    for (unsigned i = 0; i < z.multiplicity; ++i) out.push_back(z.factor);
  }
  return out;
}

}  // namespace

TEST_SUITE("zfactor") {

TEST_CASE("rational_roots examples") {
  CHECK(rational_roots(IntPoly{-1, 0, 0, 1}) == std::vector<Int>{1});
  for (long n = -20; n <= 20; ++n) {
    CHECK(rational_roots(IntPoly(std::vector<Int>{-1, 0, 3 * n + 1, 0, 3 * n + 4, 0, 1})).empty());
  }
  CHECK(rational_roots(IntPoly{-4, 0, 1}) == std::vector<Int>{-2, 2});
  CHECK(rational_roots(IntPoly{0, 0, -1, 1}) == std::vector<Int>{0, 1});
  CHECK_THROWS_AS(rational_roots(IntPoly{}), DomainError);
}

TEST_CASE("rational_roots agrees with an exhaustive scan") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    IntPoly p{1};
    for (int k = 0; k < 3; ++k) p *= IntPoly{static_cast<long>(rng() % 13) - 6, 1};
    p *= IntPoly{static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) - 1, 1};
    CHECK(rational_roots(p) == oracle::rational_roots_scan(p));
  }
}

TEST_CASE("is_irreducible_q examples") {
  CHECK(is_irreducible_q(IntPoly{1, 0, 6, 0, 5, 0, 1}));
  CHECK_FALSE(is_irreducible_q(IntPoly{-1, 0, 1, 0, 2, 0, 1}));
  CHECK(is_irreducible_q(IntPoly{-1, 1}));
  CHECK_FALSE(is_irreducible_q(IntPoly{0, 0, 1}));
  CHECK_THROWS_AS(is_irreducible_q(IntPoly{1, 0, 2}), DomainError);
  CHECK_THROWS_AS(is_irreducible_q(IntPoly{3}), DomainError);
}

TEST_CASE("irreducible everywhere modulo p but reducible over Q") {
  // x^4 + 1 and x^4 - 10x^2 + 1 have no mod-p certificate at all.
  CHECK(is_irreducible_q(IntPoly{1, 0, 0, 0, 1}));
  CHECK(is_irreducible_q(IntPoly{1, 0, -10, 0, 1}));
  const IntPoly swinnerton = IntPoly{1, 0, -10, 0, 1} * IntPoly{1, 0, 0, 0, 1};
  const auto f = factor_q(swinnerton);
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor * f[1].factor == swinnerton);
}

TEST_CASE("factor_q examples") {
  const auto a = factors_only(factor_q(IntPoly{-1, 0, 6, 0, -9, 0, 1}));
  REQUIRE(a.size() == 2);
  CHECK(((a[0] == IntPoly{1, 0, -3, 1} && a[1] == IntPoly{-1, 0, 3, 1}) ||
         (a[1] == IntPoly{1, 0, -3, 1} && a[0] == IntPoly{-1, 0, 3, 1})));

  const auto b = factors_only(factor_q(IntPoly{-1, 0, 5, 0, -6, 0, 1}));
  REQUIRE(b.size() == 2);
  CHECK(b[0] * b[1] == (IntPoly{-1, -1, 2, 1} * IntPoly{1, -1, -2, 1}));

  const auto c = factor_q(IntPoly{0, 0, 1});
  REQUIRE(c.size() == 1);
  CHECK(c[0].factor == IntPoly{0, 1});
  CHECK(c[0].multiplicity == 2);

  CHECK_THROWS_AS(factor_q(IntPoly{1, 2, 3}), DomainError);
  std::vector<Int> big(14, Int(0));
  big[0] = 1;
  big[13] = 1;
  CHECK_THROWS_AS(factor_q(IntPoly(big)), Unsupported);
}

TEST_CASE("factor_q recovers products of the h-identity cubics") {
  std::mt19937_64 rng(32);
  int tested = 0;
  while (tested < 150) {
    const long a = static_cast<long>(rng() % 41) - 20, b = static_cast<long>(rng() % 41) - 20;
    const IntPoly u(std::vector<Int>{b, 0, -a, 1}), v(std::vector<Int>{-b, 0, a, 1});
    if (!is_irreducible_q(u) || !is_irreducible_q(v) || u == v) continue;
    ++tested;
    const auto f = factors_only(factor_q(u * v));
    REQUIRE(f.size() == 2);
    CHECK(((f[0] == u && f[1] == v) || (f[0] == v && f[1] == u)));
  }
}

TEST_CASE("multiplicities and many factors") {
  const IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{1, 1} * IntPoly{2, 0, 1} * IntPoly{2, 0, 1} * IntPoly{2, 0, 1};
  const auto f = factor_q(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0].factor == IntPoly{-1, 1});
  CHECK(f[0].multiplicity == 2);
  CHECK(f[1].factor == IntPoly{1, 1});
  CHECK(f[2].factor == IntPoly{2, 0, 1});
  CHECK(f[2].multiplicity == 3);

  // twelve linear factors
  IntPoly q{1};
  for (long r = -6; r <= 6; ++r) {
    if (r != 0) q *= IntPoly{-r, 1};
  }
  CHECK(factor_q(q).size() == 12);
}

TEST_CASE("factor_q is independent of the seed") {
  const IntPoly p = IntPoly{-1, 0, 6, 0, -9, 0, 1} * IntPoly{3, 1, 0, 1};
  const auto a = factor_q(p, 1), b = factor_q(p, 12345);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].factor == b[i].factor);
}

TEST_CASE("lifting prime and Mignotte bound") {
  const IntPoly p{-3, 0, 9, 0, -6, 0, 1};
  const std::uint64_t q = choose_lifting_prime(p);
  CHECK(q >= 3);
  CHECK(is_squarefree_modp(reduce(p, q)));
  CHECK(mignotte_bound(p) == 64 * 12);  // ||p||_2 = sqrt(127), ceil 12
}

}  // TEST_SUITE
