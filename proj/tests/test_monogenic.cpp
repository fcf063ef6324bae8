#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sexticlab/error.hpp"
#include "sexticlab/monogenic.hpp"
#include "sexticlab/zfactor.hpp"

using namespace sexticlab;

namespace {

void check_invariants(const MonogenicVerdict& v) {
  switch (v.status) {
    case MonogenicStatus::Monogenic:
      CHECK_FALSE(v.unfactored.has_value());
      CHECK_FALSE(v.witness_prime.has_value());
      for (const auto& c : v.checked_primes) CHECK(c.passed);
      break;
    case MonogenicStatus::NotMonogenic:
      REQUIRE(v.witness_prime.has_value());
      REQUIRE_FALSE(v.checked_primes.empty());
      CHECK(v.checked_primes.back().prime == *v.witness_prime);
      CHECK_FALSE(v.checked_primes.back().passed);
      break;
    case MonogenicStatus::Unknown:
      CHECK(v.unfactored.has_value());
      CHECK_FALSE(v.witness_prime.has_value());
      break;
  }
}

}  // namespace

TEST_SUITE("monogenic") {

TEST_CASE("dedekind examples") {
  CHECK(dedekind_prime_ok(IntPoly{1, 0, 6, 0, 5, 0, 1}, 7));
  CHECK_FALSE(dedekind_prime_ok(IntPoly{1, 14, 9, 1}, 5));
  CHECK(dedekind_prime_ok(IntPoly{1, 1, 1}, 5));
  CHECK_THROWS_AS(dedekind_prime_ok(IntPoly{1, 1, 1}, 6), DomainError);
  CHECK_THROWS_AS(dedekind_prime_ok(IntPoly{-1, 0, 1}, 2), DomainError);
  CHECK_THROWS_AS(dedekind_prime_ok(IntPoly{1, 0, 2}, 2), DomainError);
}

TEST_CASE("classic non-monogenic indices") {
  // x^2 - 5 has index 2 in the ring of integers of Q(sqrt 5).
  CHECK_FALSE(dedekind_prime_ok(IntPoly{-5, 0, 1}, 2));
  CHECK(dedekind_prime_ok(IntPoly{-3, 0, 1}, 2));
  // Dedekind's x^3 - x^2 - 2x - 8: 2 divides every index.
  CHECK_FALSE(dedekind_prime_ok(IntPoly{-8, -2, -1, 1}, 2));
}

TEST_CASE("Dedekind agrees with the brute-force index oracle") {
  std::mt19937_64 rng(41);
  int tested = 0;
  while (tested < 250) {
    const int deg = 2 + static_cast<int>(rng() % 3);
    std::vector<Int> c(deg + 1);
    for (auto& v : c) v = static_cast<long>(rng() % 21) - 10;
    c[deg] = 1;
    const IntPoly T(c);
    if (!is_irreducible_q(T)) continue;
    for (const auto& [p, e] : factorize(discriminant(T)).factors) {
      if (e < 2) continue;
      Int size = 1;
      for (int i = 0; i < deg; ++i) size *= p;
      if (size > 20000) continue;
      ++tested;
      REQUIRE(dedekind_prime_ok(T, p) == !oracle::index_divisible_bruteforce(T, to_u64(p)));
    }
  }
}

TEST_CASE("Dedekind agrees with the oracle on even sextics at 2 and 3") {
  int tested = 0;
  for (long a = -4; a <= 4; ++a) {
    for (long b = -4; b <= 4; ++b) {
      for (long c = -4; c <= 4; ++c) {
        const IntPoly T(std::vector<Int>{c, 0, b, 0, a, 0, 1});
        if (c == 0 || !is_irreducible_q(T)) continue;
        for (std::uint64_t p : {2ULL, 3ULL}) {
          if (valuation(discriminant(T), p) < 2) continue;
          ++tested;
          REQUIRE(dedekind_prime_ok(T, p) == !oracle::index_divisible_bruteforce(T, p));
        }
      }
    }
  }
  CHECK(tested > 100);
}

TEST_CASE("generic verdict examples") {
  const MonogenicVerdict p1 = is_monogenic_generic(IntPoly{-3, 0, 9, 0, -6, 0, 1});
  CHECK(p1.status == MonogenicStatus::Monogenic);
  check_invariants(p1);

  const MonogenicVerdict f3 = is_monogenic_generic(IntPoly{1, 0, 14, 0, 9, 0, 1});
  CHECK(f3.status == MonogenicStatus::NotMonogenic);
  CHECK(f3.witness_prime == Int(5));
  check_invariants(f3);

  CHECK(is_monogenic_generic(IntPoly{-1, 0, 1, 0, 4, 0, 1}).status == MonogenicStatus::Monogenic);
  CHECK(is_monogenic_generic(IntPoly{-2, 1}).status == MonogenicStatus::Monogenic);
  CHECK_THROWS_AS(is_monogenic_generic(IntPoly{-1, 0, 1}), DomainError);
}

TEST_CASE("incomplete factorization yields Unknown") {
  const Int p("1000000000000000003"), q("1000000000000000009");
  const IntPoly T(std::vector<Int>{-(p * q), 0, 1});
  const MonogenicVerdict v = is_monogenic_generic(T, Budgets{100, 1, 0});
  if (v.status == MonogenicStatus::Unknown) {
    check_invariants(v);
    CHECK(*v.unfactored == p * q);
  } else {
    // the tiny rho budget happened to suffice
    CHECK(v.status == MonogenicStatus::Monogenic);
  }
  // 1000000007 * 998244353 is 3 mod 4 and squarefree, so Z[sqrt(N)] is maximal.
  const Int N = Int("1000000007") * Int("998244353");
  CHECK(is_monogenic_generic(IntPoly(std::vector<Int>{-N, 0, 1})).status == MonogenicStatus::Monogenic);
}

TEST_CASE("witnesses re-run in isolation fail") {
  for (long n = -8; n <= 8; ++n) {
    const IntPoly T(std::vector<Int>{1, 0, n * n + 2 * n + 6, 0, n * n + 5, 0, 1});
    const MonogenicVerdict v = is_monogenic_generic(T);
    check_invariants(v);
    if (v.witness_prime) CHECK_FALSE(dedekind_prime_ok(T, *v.witness_prime));
  }
}

TEST_CASE("jly examples") {
  CHECK(jly_check(-3, -3).status == MonogenicStatus::Monogenic);
  CHECK(jly_check(3, 1).status == MonogenicStatus::Monogenic);
  const MonogenicVerdict v = jly_check(-3, -12);
  CHECK(v.status == MonogenicStatus::NotMonogenic);
  CHECK(v.witness_prime == Int(2));
  check_invariants(v);
  CHECK(is_monogenic_generic(jly_poly(-3, -12)).witness_prime == Int(2));
  CHECK_THROWS_AS(jly_check(1, -1), DomainError);  // x^6+2x^4+x^2-1 is reducible
}

TEST_CASE("jkk examples") {
  CHECK(jkk_check(-7, -1).status == MonogenicStatus::Monogenic);
  CHECK(jkk_check(1, 3).status == MonogenicStatus::Monogenic);
  // 3 !| a, 3 || b, 4a(b/3)^3 = 6400 = 1 mod 27
  const MonogenicVerdict v = jkk_check(25, 12);
  CHECK(v.status == MonogenicStatus::NotMonogenic);
  CHECK(v.witness_prime == Int(3));
  const MonogenicVerdict g = is_monogenic_generic(jkk_poly(25, 12));
  CHECK(g.status == MonogenicStatus::NotMonogenic);
  CHECK(g.witness_prime == Int(3));
}

TEST_CASE("the mod-27 classes all fail at 3") {
  int tested = 0;
  for (long a = -60; a <= 60; ++a) {
    for (long b = -27; b <= 27; ++b) {
      if (a % 3 == 0 || b == 0 || b % 3 != 0 || b % 9 == 0) continue;
      const long b3 = b / 3;
      if (((4 * a * b3 * b3 * b3) % 27 + 27) % 27 != 1) continue;
      if (!is_irreducible_q(jkk_poly(a, b))) continue;
      ++tested;
      const MonogenicVerdict v = jkk_check(a, b);
      CHECK(v.status == MonogenicStatus::NotMonogenic);
      CHECK(dedekind_prime_ok(jkk_poly(a, b), 3) == false);
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("closed-form discriminants") {
  for (long a = -12; a <= 12; ++a) {
    for (long b = -12; b <= 12; ++b) {
      REQUIRE(discriminant(jly_poly(a, b)) == jly_discriminant(a, b));
      REQUIRE(discriminant(jkk_poly(a, b)) == jkk_discriminant(a, b));
    }
  }
}

TEST_CASE("shape matching") {
  CHECK(match_jly(jly_poly(-3, 7)) == std::make_pair(Int(-3), Int(7)));
  CHECK(match_jkk(jkk_poly(5, -2)) == std::make_pair(Int(5), Int(-2)));
  CHECK_FALSE(match_jly(IntPoly{1, 0, 5, 0, 3, 0, 1}).has_value());  // odd x^4 coefficient
  CHECK_FALSE(match_jly(IntPoly{1, 0, 5, 0, 4, 0, 1}).has_value());  // 5 != 2^2
  CHECK_FALSE(match_jkk(IntPoly{0, 0, 0, 0, 0, 0, 1}).has_value());
  CHECK_FALSE(match_jkk(IntPoly{3, 0, 5, 0, 1, 0, 1}).has_value());
}

TEST_CASE("the two readings of the jly branch agree in-branch") {
  for (long a = -60; a <= 60; ++a) {
    for (long b = -60; b <= 60; ++b) {
      for (unsigned p : {2u, 3u}) {
        if (a % static_cast<long>(p) != 0 || b % static_cast<long>(p) == 0) continue;
        const Int printed = detail::jly_branch2_printed(a, b, p);
        const Int factored = detail::jly_branch2_factored(a, b, p);
        REQUIRE(printed == factored);
      }
    }
  }
}

TEST_CASE("specialized tests agree with generic on a small grid") {
  for (long a = -15; a <= 15; ++a) {
    for (long b = -15; b <= 15; ++b) {
      if (is_irreducible_q(jly_poly(a, b))) {
        const auto s = jly_check(a, b), g = monogenic_generic_irreducible(jly_poly(a, b));
        check_invariants(s);
        REQUIRE(s.status == g.status);
      }
      if (is_irreducible_q(jkk_poly(a, b))) {
        const auto s = jkk_check(a, b), g = monogenic_generic_irreducible(jkk_poly(a, b));
        check_invariants(s);
        REQUIRE(s.status == g.status);
      }
    }
  }
}

}  // TEST_SUITE
