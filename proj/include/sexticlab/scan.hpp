#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sexticlab/families.hpp"
#include "sexticlab/intkit.hpp"
#include "sexticlab/monogenic.hpp"

namespace sexticlab {

/// One evaluated parameter cell. For F1/F2 every (a, b) in the rectangle is
/// evaluated, not just family members; galois and monogenic are empty when
/// the polynomial is reducible.
struct ScanReport {
  Family family;
  std::vector<Int> params;
  IntPoly poly;
  bool irreducible = false;
  std::optional<GaloisVerdict> galois;
  std::optional<MonogenicVerdict> monogenic;
  Int disc;
  PrimeFactorization disc_factors;
  double ms = 0;
};

/// The polynomial attached to a cell: f1/f2 take (a, b), f3/a4 take (n).
IntPoly family_poly(Family family, const std::vector<Int>& params);

ScanReport evaluate_cell(Family family, const std::vector<Int>& params, const Budgets& budgets = {});

struct ScanSpec {
  Family family = Family::F1;
  long min = 0, max = 0;                // a for f1/f2, n for f3/a4
  std::optional<long> b_min, b_max;     // f1/f2 only; default to [min, max]
};

std::vector<std::vector<Int>> scan_cells(const ScanSpec& spec);

/// Evaluates every cell on `jobs` worker threads and returns the reports
/// sorted by params.
std::vector<ScanReport> run_scan(const ScanSpec& spec, unsigned jobs, const Budgets& budgets = {});

/// {family, params, irreducible, galois, monogenic, witness, disc_sign,
/// disc_factors, ms}. Integers that do not fit in 64 bits are emitted as
/// strings. An unfactored cofactor appears in disc_factors with exponent 0.
std::string to_json_line(const ScanReport& r, bool timing = true);

}  // namespace sexticlab
