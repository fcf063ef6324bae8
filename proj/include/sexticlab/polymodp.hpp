#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sexticlab/polyz.hpp"

namespace sexticlab {

/// Polynomial over F_p, p a prime below 2^63. Residues are kept in [0, p)
/// and the top stored coefficient is nonzero.
class ModPoly {
 public:
  explicit ModPoly(std::uint64_t p) : p_(p) {}
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static ModPoly constant(std::uint64_t p, std::uint64_t c);
  static ModPoly x(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  ModPoly& operator+=(const ModPoly& q);
  ModPoly& operator-=(const ModPoly& q);
  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  ModPoly scaled(std::uint64_t s) const;
  ModPoly monic() const;

 private:
  void normalize();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Coefficientwise reduction. Throws DomainError if p is not prime,
/// Unsupported if p >= 2^63.
ModPoly reduce(const IntPoly& f, const Int& p);
ModPoly reduce(const IntPoly& f, std::uint64_t p);

/// Lift with every coefficient in [0, p).
IntPoly lift(const ModPoly& u);

/// Throws DomainError on a zero divisor or modulus mismatch.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den);
ModPoly rem(const ModPoly& num, const ModPoly& den);

ModPoly derivative(const ModPoly& u);

/// Monic gcd; gcd(0, 0) == 0. Throws DomainError on modulus mismatch.
ModPoly gcd_modp(const ModPoly& u, const ModPoly& v);

/// Monic g = gcd(u, v) and s, t with s*u + t*v == g.
struct ExtGcd {
  ModPoly g, s, t;
};
ExtGcd ext_gcd_modp(const ModPoly& u, const ModPoly& v);

/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m);

struct ModFactor {
  ModPoly factor;
  unsigned multiplicity;
};

/// Complete factorization into monic irreducibles, sorted by degree then
/// coefficients (leading term first). The unit lc(u) is dropped.
/// Throws DomainError on zero input.
std::vector<ModFactor> factor_modp(const ModPoly& u, std::uint64_t seed = 0);

/// Rabin's test. Throws DomainError for constant input.
bool is_irreducible_modp(const ModPoly& u);

/// gcd(u, u') is constant. Throws DomainError on zero input.
bool is_squarefree_modp(const ModPoly& u);

}  // namespace sexticlab
