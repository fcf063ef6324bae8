#include "sexticlab/sextic.hpp"

#include "sexticlab/zfactor.hpp"

namespace sexticlab {

IntPoly EvenSextic::as_poly() const { return IntPoly(std::vector<Int>{c, 0, b, 0, a, 0, 1}); }

std::optional<EvenSextic> as_even_sextic(const IntPoly& p) {
  if (p.degree() != 6 || !p.is_monic()) return std::nullopt;
  for (std::size_t i = 1; i < 6; i += 2) {
    if (p.coeff(i) != 0) return std::nullopt;
  }
  return EvenSextic{p.coeff(4), p.coeff(2), p.coeff(0)};
}

std::string to_string(GaloisClass g) {
  switch (g) {
    case GaloisClass::C6: return "C6";
    case GaloisClass::A4: return "A4";
    case GaloisClass::Other: return "Other";
  }
  return "Other";
}

IntPoly resolvent_cubic(const EvenSextic& f) { return IntPoly(std::vector<Int>{f.c, f.b, f.a, 1}); }

IntPoly aux_sextic(const EvenSextic& f) {
  return IntPoly(std::vector<Int>{-f.c * f.c, 0, f.a * f.c, 0, -f.b, 0, 1});
}

GaloisVerdict classify_irreducible(const EvenSextic& f, std::uint64_t seed) {
  GaloisVerdict v;
  v.neg_c_square = is_square(-f.c);
  v.disc_g_square = is_square(discriminant(resolvent_cubic(f)));
  v.h_reducible = !is_irreducible_q(aux_sextic(f), seed);
  if (v.disc_g_square && !v.neg_c_square && v.h_reducible) {
    v.group = GaloisClass::C6;
  } else if (v.disc_g_square && v.neg_c_square && !v.h_reducible) {
    v.group = GaloisClass::A4;
  }
  return v;
}

GaloisVerdict classify(const EvenSextic& f, std::uint64_t seed) {
  const IntPoly poly = f.as_poly();
  if (!is_irreducible_q(poly, seed)) {
    const auto factors = factor_q(poly, seed);
    throw ReducibleError(poly, factors.front().factor);
  }
  return classify_irreducible(f, seed);
}

}  // namespace sexticlab
