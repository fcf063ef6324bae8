#include <doctest.h>

#include "sexticlab/sextic.hpp"
#include "sexticlab/zfactor.hpp"

using namespace sexticlab;

TEST_SUITE("sextic") {

TEST_CASE("as_poly and recognition") {
  const EvenSextic f{-6, 9, -3};
  CHECK(f.as_poly() == IntPoly{-3, 0, 9, 0, -6, 0, 1});
  CHECK(as_even_sextic(f.as_poly()) == f);
  CHECK_FALSE(as_even_sextic(IntPoly{1, 1, 0, 0, 0, 0, 1}).has_value());
  CHECK_FALSE(as_even_sextic(IntPoly{1, 0, 0, 0, 0, 0, 2}).has_value());
  CHECK_FALSE(as_even_sextic(IntPoly{1, 0, 1}).has_value());
}

TEST_CASE("resolvent cubic") {
  CHECK(resolvent_cubic({-6, 9, -3}) == IntPoly{-3, 9, -6, 1});
  CHECK(resolvent_cubic({0, 0, 7}) == IntPoly{7, 0, 0, 1});
  CHECK(resolvent_cubic({5, 6, 1}) == IntPoly{1, 6, 5, 1});
  for (long a = -3; a <= 3; ++a) {
    const EvenSextic f{a, a + 2, 5};
    CHECK(compose_x2(resolvent_cubic(f)) == f.as_poly());
  }
}

TEST_CASE("aux sextic") {
  CHECK(aux_sextic({4, 0, 3}) == IntPoly{-9, 0, 12, 0, 0, 0, 1});
  CHECK(aux_sextic({0, 5, 3}) == IntPoly{-9, 0, 0, 0, -5, 0, 1});
  for (long n = -3; n <= 3; ++n) {
    CHECK(aux_sextic({3 * n + 4, 3 * n + 1, -1}) == IntPoly(std::vector<Int>{-1, 0, -(3 * n + 4), 0, -(3 * n + 1), 0, 1}));
  }
}

TEST_CASE("classify examples") {
  CHECK(classify({5, 6, 1}).group == GaloisClass::C6);
  CHECK(classify({4, 1, -1}).group == GaloisClass::A4);
  const GaloisVerdict other = classify({0, 0, 2});
  CHECK(other.group == GaloisClass::Other);
  CHECK_FALSE(other.neg_c_square);
}

TEST_CASE("classify reports the three conditions") {
  const GaloisVerdict c6 = classify({5, 6, 1});
  CHECK_FALSE(c6.neg_c_square);
  CHECK(c6.disc_g_square);
  CHECK(c6.h_reducible);
  const GaloisVerdict a4 = classify({4, 1, -1});
  CHECK(a4.neg_c_square);
  CHECK(a4.disc_g_square);
  CHECK_FALSE(a4.h_reducible);
}

TEST_CASE("reducible input carries a factor") {
  try {
    classify({2, 1, -1});
    FAIL("expected ReducibleError");
  } catch (const ReducibleError& e) {
    const IntPoly f = e.factor();
    CHECK(f.degree() >= 1);
    CHECK(f.degree() < 6);
    CHECK(exact_quotient(IntPoly{-1, 0, 1, 0, 2, 0, 1}, f).has_value());
  }
  CHECK_THROWS_AS(classify({1, 1, 0}), ReducibleError);
}

TEST_CASE("verdict consistency on a grid") {
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      for (long c = -6; c <= 6; ++c) {
        const EvenSextic f{a, b, c};
        if (c == 0 || !is_irreducible_q(f.as_poly())) continue;
        const GaloisVerdict v = classify_irreducible(f);
        CHECK(v.neg_c_square == is_square(Int(-c)));
        CHECK(v.disc_g_square == is_square(discriminant(resolvent_cubic(f))));
        if (v.group == GaloisClass::C6) {
          CHECK_FALSE(v.neg_c_square);
          CHECK(v.disc_g_square);
        }
        if (v.group == GaloisClass::A4) CHECK(v.neg_c_square);
        // ab = 0 never gives C6
        if (a * b == 0) CHECK(v.group != GaloisClass::C6);
      }
    }
  }
}

TEST_CASE("names") {
  CHECK(to_string(GaloisClass::C6) == "C6");
  CHECK(to_string(GaloisClass::A4) == "A4");
  CHECK(to_string(GaloisClass::Other) == "Other");
}

}  // TEST_SUITE
