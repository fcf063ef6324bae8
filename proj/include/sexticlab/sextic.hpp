#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "sexticlab/polyz.hpp"

namespace sexticlab {

/// x^6 + a x^4 + b x^2 + c.
struct EvenSextic {
  Int a, b, c;

  IntPoly as_poly() const;
  friend bool operator==(const EvenSextic&, const EvenSextic&) = default;
};

/// Recognizes a monic degree-6 polynomial with vanishing odd coefficients.
std::optional<EvenSextic> as_even_sextic(const IntPoly& p);

enum class GaloisClass { C6, A4, Other };

std::string to_string(GaloisClass g);

/// Verdict plus the three conditions it was derived from.
struct GaloisVerdict {
  GaloisClass group = GaloisClass::Other;
  bool neg_c_square = false;   // -c is a square
  bool disc_g_square = false;  // disc of the resolvent cubic is a square
  bool h_reducible = false;    // auxiliary sextic is reducible over Q
};

/// Thrown when classification is requested for a reducible sextic.
class ReducibleError : public std::domain_error {
 public:
  ReducibleError(const IntPoly& poly, IntPoly factor)
      : std::domain_error(to_string(poly) + " is reducible over Q (factor " + to_string(factor) + ")"),
        factor_(std::move(factor)) {}

  const IntPoly& factor() const noexcept { return factor_; }

 private:
  IntPoly factor_;
};

/// x^3 + a x^2 + b x + c, so that f(x) = g(x^2).
IntPoly resolvent_cubic(const EvenSextic& f);

/// x^6 - b x^4 + a c x^2 - c^2.
IntPoly aux_sextic(const EvenSextic& f);

/// C6 iff -c is not a square, disc(g) is a square and h is reducible;
/// A4 iff -c is a square, disc(g) is a square and h is irreducible;
/// Other otherwise. Checks irreducibility of f first and throws
/// ReducibleError (carrying a nontrivial factor) if it fails.
GaloisVerdict classify(const EvenSextic& f, std::uint64_t seed = 0);

/// Same as classify, for callers that already established irreducibility.
GaloisVerdict classify_irreducible(const EvenSextic& f, std::uint64_t seed = 0);

}  // namespace sexticlab
