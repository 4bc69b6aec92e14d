#pragma once

#include <optional>
#include <string>
#include <vector>

namespace adjstat {

struct CheckResult {
  std::string name;
  std::string params;
  bool pass = false;
  std::string detail;  // first discrepancy, empty on success
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool skipped = false;
  std::string skip_reason;

  bool pass() const;
  std::size_t failures() const;
};

/// Distribution of a(a+s) on words: oracle, last-letter DP, both closed
/// forms and the alternating recurrence agree for s ≤ s_max, s < k ≤ k_max,
/// n ≤ n_max.
SuiteReport check_three_way(int k_max = 6, int s_max = 4, int n_max = 8);

/// a_n(0) for (k,s) ∈ {(3,2),(4,2),(5,2)} against F_{2n+2}, 1/(1-4x+2x^2)
/// and the shifted 1/(1-5x+3x^2-x^3) coefficients, n ≤ n_max, with the brute
/// force avoider count for n ≤ oracle_n_max.
SuiteReport check_avoidance(int n_max = 12, int oracle_n_max = 8);

/// k^{n-2}(k-s)(n-1) against the summed oracle statistic.
SuiteReport check_word_totals(int k_max = 6, int s_max = 4, int n_max = 8);

/// Gap r reduces to a_{d+1}^t a_d^{r-t}, r ≤ r_max, k ≤ k_max, n ≤ n_max.
SuiteReport check_gap(int r_max = 3, int k_max = 4, int n_max = 8);

/// Level/ascent/descent suite on 3-ary words avoiding 1-3.
SuiteReport check_fib(int oracle_n_max = 9, int points = 20, int series_n = 12, int totals_n_max = 15);

/// Absolute-difference suite: DP vs oracle, both closed forms, the two-term
/// recurrence, the large-regime B(x) at five q values, and LU factors.
SuiteReport check_abs(int k_max = 6, int s_max = 3, int n_max = 8, int series_n = 12, int lu_points = 20,
                      int d_max = 6);

/// Set partition suite.
SuiteReport check_partitions(int n_max = 9, int q_total_n_max = 10, int s1_k_max = 4);

/// Bijection suite: cardinality chain and round trips for n ≤ n_max,
/// J'' → tilings for n ≤ tiling_n_max.
SuiteReport check_bijections(int n_max = 10, int tiling_n_max = 12);

/// Determinant formulas and the alternating Chebyshev-sum identity.
SuiteReport check_algebra(int m_max = 12, int s_max = 4, int det_b_max = 10, int cheb_n_max = 12);

/// Reconcile b007070.txt, b200676.txt and b277666.txt found in `dir` over at
/// least min_terms terms. Skipped when the directory holds none of them.
SuiteReport check_oeis(const std::optional<std::string>& dir, std::size_t min_terms = 20);

/// Directory named by ADJSTAT_BFILE_DIR, if set.
std::optional<std::string> bfile_dir_from_env();

std::string suite_to_json(const SuiteReport& r, int indent = 2);

}  // namespace adjstat
