#include "sexticlab/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sexticlab/error.hpp"
#include "sexticlab/zfactor.hpp"

namespace sexticlab {

std::string to_string(Family f) {
  switch (f) {
    case Family::F1: return "f1";
    case Family::F2: return "f2";
    case Family::F3: return "f3";
    case Family::A4Fam: return "a4";
  }
  return "?";
}

EvenSextic f1_sextic(const Int& a, const Int& b) { return {2 * a, a * a, b}; }

EvenSextic f2_sextic(const Int& a, const Int& b) { return {a * b * b, 2 * a * b, a}; }

std::optional<FamilyMember> f1_member(const Int& a, const Int& b, std::uint64_t seed) {
  const Int cert = 4 * a * a * a * b - 27 * b * b;
  if (!is_square(cert)) return std::nullopt;
  const EvenSextic f = f1_sextic(a, b);
  if (!is_irreducible_q(f.as_poly(), seed)) return std::nullopt;
  return FamilyMember{Family::F1, {a, b}, f, cert};
}

std::pair<Int, Int> f1_witness(const Int& n) {
  if (n < 1) throw DomainError("f1_witness: n must be at least 1");
  const Int a = 9 * n * n + 3 * n + 7;
  return {a, a * a};
}

std::optional<FamilyMember> f2_member(const Int& a, const Int& b, std::uint64_t seed) {
  const Int cert = 4 * a * b * b * b - 27;
  if (!is_square(cert)) return std::nullopt;
  const EvenSextic f = f2_sextic(a, b);
  if (!is_irreducible_q(f.as_poly(), seed)) return std::nullopt;
  return FamilyMember{Family::F2, {a, b}, f, cert};
}

std::pair<Int, Int> f2_witness(const Int& n) { return {9 * n * n + 15 * n + 13, Int(1)}; }

EvenSextic f3_poly(const Int& n) { return {n * n + 5, n * n + 2 * n + 6, Int(1)}; }

std::pair<EvenSextic, Int> a4_poly(const Int& n) {
  return {EvenSextic{3 * n + 4, 3 * n + 1, Int(-1)}, 9 * n * n + 15 * n + 13};
}

Int hjms_default_bound(const Int& A, const Int& B, const Int& C) {
  Int m = 10;
  for (const Int* v : {&A, &B, &C}) {
    if (abs(*v) > m) m = abs(*v);
  }
  return 4 * m;
}

std::optional<std::pair<Int, Int>> hjms_witness(const Int& A, const Int& B, const Int& C, const Int& bound) {
  if (bound < 1) throw DomainError("hjms_witness: bound must be positive");
  const IntPoly G(std::vector<Int>{-C * C, B, A, 1});
  if (!is_irreducible_q(G)) throw DomainError("hjms_witness: " + to_string(G) + " is reducible over Q");

  auto try_m = [&](const Int& m) -> std::optional<std::pair<Int, Int>> {
    const Int twice_n = A + m * m;
    if (mpz_odd_p(twice_n.get_mpz_t())) return std::nullopt;
    const Int n = twice_n / 2;
    if (abs(n) > bound) return std::nullopt;
    if (n * n - 2 * m * C != B) return std::nullopt;
    return std::make_pair(m, n);
  };
  for (Int m = 0; m <= bound; ++m) {
    if (auto hit = try_m(m)) return hit;
    if (m != 0) {
      if (auto hit = try_m(-m)) return hit;
    }
  }
  return std::nullopt;
}

DistinctnessReport distinct_fields(const std::vector<IntPoly>& polys) {
  DistinctnessReport r;
  const std::size_t n = polys.size();
  std::set<Int> signed_values, abs_values;
  for (const auto& p : polys) {
    r.discriminants.push_back(discriminant(p));
    signed_values.insert(r.discriminants.back());
    abs_values.insert(abs(r.discriminants.back()));
  }
  r.distinct_signed = signed_values.size();
  r.distinct_abs = abs_values.size();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (r.discriminants[i] != r.discriminants[j]) continue;
      const bool same = polys[i] == polys[j] ||
                        (polys[i].coeff(0) != 0 && reverse(polys[i]) == polys[j]);
      if (same) {
        if (polys[i] != polys[j]) r.reciprocal_pairs.emplace_back(i, j);
        parent[find(i)] = find(j);
      } else {
        r.undetermined.emplace_back(i, j);
      }
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
  r.field_count = roots.size();
  return r;
}

}  // namespace sexticlab
