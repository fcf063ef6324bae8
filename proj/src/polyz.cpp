#include "sexticlab/polyz.hpp"

#include <algorithm>

#include "sexticlab/error.hpp"

namespace sexticlab {

namespace {

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntPoly exact_div(const IntPoly& p, const Int& d) {
  std::vector<Int> c = p.coeffs();
  for (auto& v : c) v = exact_div(v, d);
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t k) {
  std::vector<Int> v(k + 1, Int(0));
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& q) {
  if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& q) { return *this = *this * q; }

IntPoly& IntPoly::operator*=(const Int& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Int> r(p.coeffs_.size() + q.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), p.coeffs_[i].get_mpz_t(), q.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly operator-(IntPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

bool poly_less(const IntPoly& p, const IntPoly& q) {
  if (p.degree() != q.degree()) return p.degree() < q.degree();
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

Int eval(const IntPoly& p, const Int& x0) {
  Int acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Int> d(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly compose_x2(const IntPoly& g) {
  if (g.is_zero()) return {};
  std::vector<Int> c(2 * g.coeffs().size() - 1, Int(0));
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) c[2 * i] = g.coeffs()[i];
  return IntPoly(std::move(c));
}

IntPoly reverse(const IntPoly& p) {
  if (p.is_zero() || p.coeff(0) == 0) throw DomainError("reverse: p(0) must be nonzero");
  std::vector<Int> c(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& num, const IntPoly& den) {
  if (!den.is_monic()) throw DomainError("divmod_monic: divisor must be monic");
  if (num.degree() < den.degree()) return {IntPoly{}, num};
  std::vector<Int> r = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  std::vector<Int> q(r.size() - dd, Int(0));
  for (std::size_t k = r.size(); k-- > dd;) {
    const Int lead = r[k];
    if (lead == 0) continue;
    q[k - dd] = lead;
    for (std::size_t j = 0; j <= dd; ++j) {
      mpz_submul(r[k - dd + j].get_mpz_t(), lead.get_mpz_t(), d[j].get_mpz_t());
    }
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> exact_quotient(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw DomainError("exact_quotient: division by zero polynomial");
  if (num.is_zero()) return IntPoly{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<Int> r = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  const Int& lc = d.back();
  std::vector<Int> q(r.size() - dd, Int(0));
  for (std::size_t k = r.size(); k-- > dd;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    const Int t = exact_div(r[k], lc);
    q[k - dd] = t;
    for (std::size_t j = 0; j <= dd; ++j) mpz_submul(r[k - dd + j].get_mpz_t(), t.get_mpz_t(), d[j].get_mpz_t());
  }
  for (std::size_t k = 0; k < dd; ++k) {
    if (r[k] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw DomainError("pseudo_remainder: division by zero polynomial");
  if (num.degree() < den.degree()) return num;
  const Int lc = den.leading();
  const int dd = den.degree();
  int e = num.degree() - dd + 1;
  IntPoly r = num;
  while (!r.is_zero() && r.degree() >= dd) {
    const IntPoly shifted = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - dd)) * den;
    r = r * lc - shifted;
    --e;
  }
  if (e > 0) r *= pow_int(lc, static_cast<unsigned long>(e));
  return r;
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int c = content(p);
  if (sgn(p.leading()) < 0) c = -c;
  return exact_div(p, c);
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero()) return primitive_part(q);
  if (q.is_zero()) return primitive_part(p);
  IntPoly a = primitive_part(p);
  IntPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.degree() == 0) return IntPoly{1};
  return a;
}

Int resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant: zero polynomial argument");
  if (q.degree() == 0) return pow_int(q.leading(), static_cast<unsigned long>(p.degree()));
  if (p.degree() == 0) return pow_int(p.leading(), static_cast<unsigned long>(q.degree()));

  IntPoly a = p;
  IntPoly b = q;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
  }
  const Int ca = content(a);
  const Int cb = content(b);
  a = exact_div(a, ca);
  b = exact_div(b, cb);
  const Int scale = pow_int(ca, static_cast<unsigned long>(b.degree())) *
                    pow_int(cb, static_cast<unsigned long>(a.degree()));

  Int g = 1;
  Int h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    b = exact_div(r, g * pow_int(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta > 0) {
      h = exact_div(pow_int(g, static_cast<unsigned long>(delta)),
                    pow_int(h, static_cast<unsigned long>(delta - 1)));
    }
    if (b.degree() == 0) {
      const auto da = static_cast<unsigned long>(a.degree());
      const Int last = exact_div(pow_int(b.leading(), da), pow_int(h, da - 1));
      return sign * scale * last;
    }
  }
}

Int discriminant(const IntPoly& p) {
  const int n = p.degree();
  if (n < 2) throw DomainError("discriminant: degree must be at least 2");
  Int r = resultant(p, derivative(p));
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return exact_div(r, p.leading());
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = sgn(c[i]) < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Int mag = abs(c[i]);
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace sexticlab
