#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sexticlab/intkit.hpp"

namespace sexticlab {

/// Dense polynomial over Z. coeffs()[i] is the coefficient of x^i; the top
/// stored coefficient is nonzero and the zero polynomial stores nothing.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t k);
  static IntPoly x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  /// Leading coefficient; 0 for the zero polynomial.
  Int leading() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

  IntPoly& operator+=(const IntPoly& q);
  IntPoly& operator-=(const IntPoly& q);
  IntPoly& operator*=(const IntPoly& q);
  IntPoly& operator*=(const Int& s);

  friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
  friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(IntPoly p, const Int& s) { return p *= s; }
  friend IntPoly operator*(const Int& s, IntPoly p) { return p *= s; }
  friend IntPoly operator-(IntPoly p);
  friend bool operator==(const IntPoly& p, const IntPoly& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void normalize();

  std::vector<Int> coeffs_;
};

/// Orders by degree, then by coefficients from the leading term down.
bool poly_less(const IntPoly& p, const IntPoly& q);

Int eval(const IntPoly& p, const Int& x0);
IntPoly derivative(const IntPoly& p);

/// g(x^2).
IntPoly compose_x2(const IntPoly& g);

/// x^deg(p) * p(1/x). Throws DomainError when p(0) == 0.
IntPoly reverse(const IntPoly& p);

/// Quotient and remainder for a monic divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& num, const IntPoly& den);

/// num / den if den divides num in Z[x], otherwise nothing.
std::optional<IntPoly> exact_quotient(const IntPoly& num, const IntPoly& den);

/// lc(den)^(deg num - deg den + 1) * num mod den.
IntPoly pseudo_remainder(const IntPoly& num, const IntPoly& den);

Int content(const IntPoly& p);
/// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Greatest common divisor in Z[x], primitive with positive leading coefficient.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

/// Resultant by the subresultant PRS. Throws DomainError on a zero argument.
Int resultant(const IntPoly& p, const IntPoly& q);

/// (-1)^(n(n-1)/2) * Res(p, p') / lc(p), n = deg p. Throws DomainError for deg < 2.
Int discriminant(const IntPoly& p);

/// Renders in the expression grammar accepted by parse_poly ("x^6-6x^4+9x^2-3").
std::string to_string(const IntPoly& p);

}  // namespace sexticlab
