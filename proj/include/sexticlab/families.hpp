#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sexticlab/sextic.hpp"

namespace sexticlab {

enum class Family { F1, F2, F3, A4Fam };

std::string to_string(Family f);

/// A verified member of one of the quadrinomial families. `params` is (a, b)
/// for F1/F2 and (n) for F3/A4Fam. The certificate is 4a^3 b - 27b^2 (F1),
/// 4ab^3 - 27 (F2), 9n^2 + 15n + 13 (A4Fam), absent for F3.
struct FamilyMember {
  Family family;
  std::vector<Int> params;
  EvenSextic poly;
  std::optional<Int> certificate;
};

/// x^6 + 2a x^4 + a^2 x^2 + b, when irreducible with 4a^3 b - 27 b^2 a square.
std::optional<FamilyMember> f1_member(const Int& a, const Int& b, std::uint64_t seed = 0);

/// (9n^2 + 3n + 7, (9n^2 + 3n + 7)^2); throws DomainError for n < 1.
std::pair<Int, Int> f1_witness(const Int& n);

/// x^6 + a b^2 x^4 + 2ab x^2 + a, when irreducible with 4ab^3 - 27 a square.
std::optional<FamilyMember> f2_member(const Int& a, const Int& b, std::uint64_t seed = 0);

/// (9n^2 + 15n + 13, 1).
std::pair<Int, Int> f2_witness(const Int& n);

/// x^6 + (n^2 + 5) x^4 + (n^2 + 2n + 6) x^2 + 1.
EvenSextic f3_poly(const Int& n);

/// x^6 + (3n + 4) x^4 + (3n + 1) x^2 - 1 together with 9n^2 + 15n + 13.
std::pair<EvenSextic, Int> a4_poly(const Int& n);

EvenSextic f1_sextic(const Int& a, const Int& b);
EvenSextic f2_sextic(const Int& a, const Int& b);

/// max(|A|, |B|, |C|, 10) * 4.
Int hjms_default_bound(const Int& A, const Int& B, const Int& C);

/// Searches |m|, |n| <= bound for A = 2n - m^2 and B = n^2 - 2mC, which makes
/// (x^3 + m x^2 + n x + C)(x^3 - m x^2 + n x - C) = x^6 + A x^4 + B x^2 - C^2.
/// m is tried in the order 0, 1, -1, 2, -2, ...
/// Throws DomainError unless x^3 + A x^2 + B x - C^2 is irreducible over Q.
std::optional<std::pair<Int, Int>> hjms_witness(const Int& A, const Int& B, const Int& C, const Int& bound);

/// Field bookkeeping for a list of monogenic polynomials, whose polynomial
/// discriminants are therefore field discriminants.
struct DistinctnessReport {
  std::vector<Int> discriminants;
  std::size_t distinct_signed = 0;  // distinct values of disc
  std::size_t distinct_abs = 0;     // distinct values of |disc|
  /// Index pairs with equal disc where one polynomial is the other reversed
  /// (so they define the same field).
  std::vector<std::pair<std::size_t, std::size_t>> reciprocal_pairs;
  /// Index pairs with equal disc and no certificate either way.
  std::vector<std::pair<std::size_t, std::size_t>> undetermined;
  /// Classes after merging identical and reciprocal polynomials.
  std::size_t field_count = 0;
};

DistinctnessReport distinct_fields(const std::vector<IntPoly>& monogenic_polys);

}  // namespace sexticlab
