#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sexticlab/intkit.hpp"

namespace sexticlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;  // counts on success, first discrepancy on failure
};

/// Scan bounds for criteria 2-8. `with_range(N)` sets every bound to N.
struct VerifyBounds {
  long ab_zero = 20;
  long f1_a = 60, f1_b = 60;
  long f2_a = 60, f2_b = 20;
  long f3_n = 50;
  long a4_n = 100;
  long f1_witness_n = 50;  // n in [1, N]
  long f2_witness_n = 50;  // n in [-N, N]

  static VerifyBounds with_range(long n);
};

CriterionResult check_golden_sextet(const Budgets& budgets = {});
CriterionResult check_ab_zero(long bound, const Budgets& budgets = {});
CriterionResult check_f1_grid(long a_bound, long b_bound, const Budgets& budgets = {});
CriterionResult check_f2_grid(long a_bound, long b_bound, const Budgets& budgets = {});
CriterionResult check_f3_family(long n_bound, const Budgets& budgets = {});
CriterionResult check_a4_family(long n_bound, const Budgets& budgets = {});
CriterionResult check_witness_families(long f1_n, long f2_n, const Budgets& budgets = {});
CriterionResult check_oracle_equivalence(const VerifyBounds& bounds, const Budgets& budgets = {});

/// Runs criteria 1-8 in order, calling `on_result` after each one.
std::vector<CriterionResult> verify_paper(const VerifyBounds& bounds, const Budgets& budgets = {},
                                          const std::function<void(const CriterionResult&)>& on_result = {});

/// "  3  PASS   12.41s / 60s  title  (detail)"
std::string format_result(const CriterionResult& r);

}  // namespace sexticlab
