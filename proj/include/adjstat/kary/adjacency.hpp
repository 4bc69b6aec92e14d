#pragma once

#include <cstddef>
#include <vector>

#include "adjstat/algebra/matrix.hpp"
#include "adjstat/algebra/poly.hpp"
#include "adjstat/algebra/ratfunc.hpp"

namespace adjstat {

/// Alphabet size k and difference s, with the decomposition
/// k = k' + s·k'', 1 ≤ k' ≤ s, k'' ≥ 0.
struct KSParams {
  int k = 1;
  int s = 1;
  int kp = 1;   // k'
  int kpp = 0;  // k''

  static KSParams make(int k, int s);
};

/// Distribution of the signed-difference statistic refined by last letter.
/// rows[n][i-1] = a_{n,i} (empty for n = 0); totals[n] = a_n.
struct ATable {
  KSParams params;
  std::vector<std::vector<QPoly>> rows;
  std::vector<QPoly> totals;
};

/// Fills a_{n,i} for n = 0..N from a_{1,i} = 1 and
///   a_{n,i} = a_{n-1}                           (i ≤ s)
///   a_{n,i} = a_{n-1} + (q-1)·a_{n-1,i-s}        (i > s).
ATable a_table(const KSParams& params, std::size_t n_max);

/// a_0..a_N via a_n = Σ_{i=0}^{k''} (q-1)^i (k-is) a_{n-i-1}, seeded with
/// a_0..a_{k''} from a_table.
std::vector<QPoly> a_rec_alt(const KSParams& params, std::size_t n_max);

/// A(x) = (1+(1-q)x)^2 / (1 - (k-2+2q)x - (k+s-1+q)(1-q)x^2
///                         + (k'(1+(1-q)x) - s)·x·((q-1)x)^{k''+1}).
RatFunc<QPoly> gf_A(const KSParams& params);
/// A(x) = 1/(1 - Σ_{i=0}^{k''} (q-1)^i (k-is) x^{i+1}).
RatFunc<QPoly> gf_A_reduced(const KSParams& params);

/// a_n(0) for n = 0..N from the q = 0 recurrence with terms at lags
/// 1, 2, k''+2, k''+3. Cross-checked against a_table at q = 0 and against
/// the alternating q = 0 recurrence; throws InternalInvariantViolation if
/// the three routes disagree.
std::vector<BigInt> avoid_count(const KSParams& params, std::size_t n_max);

/// Total occurrences of a(a+s) over [k]^n: k^{n-2}(k-s)(n-1), and 0 when
/// k ≤ s or n ≤ 1.
BigInt total_occurrences(const KSParams& params, int n);

/// Distribution of #{i : w[i+r] - w[i] = s} over [k]^n as a_{d+1}^t·a_d^{r-t},
/// where n = dr + t.
QPoly gap_distribution(const KSParams& params, int r, int n);

/// Polynomials in one variable z.
using ZPoly = Poly<BigInt>;

/// m×m matrix with 1 on the superdiagonal and z at (i, i-s+1) for
/// s ≤ i ≤ m (1-based).
SquareMatrix<ZPoly> banded_matrix(int m, int s);
/// (−1)^{m−d} z^d when m = ds, else 0.
ZPoly banded_det_formula(int m, int s);

/// k×k matrix with unit diagonal and (1-q)x at (i, i-s), with column `col`
/// (1-based) replaced by all ones.
SquareMatrix<XQPoly> cramer_matrix(int k, int s, int col);
/// Σ_{j=0}^{d} (−(1−q)x)^j with i = ds + r, 1 ≤ r ≤ s: the closed value of
/// det(cramer_matrix(i, s, i)).
XQPoly cramer_det_formula(int i, int s);

}  // namespace adjstat
