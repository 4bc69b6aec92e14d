#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "adjstat/algebra/matrix.hpp"
#include "adjstat/algebra/poly.hpp"
#include "adjstat/algebra/ratfunc.hpp"

namespace adjstat {

/// Which system of recurrences governs b_{n,i}.
enum class AbsRegime {
  kTrivial,  // k ≤ s: no occurrence possible
  kSmall,    // s+1 ≤ k ≤ 2s
  kLarge,    // k ≥ 2s+1
};

AbsRegime abs_regime(int k, int s);

/// Distribution of #{i : |w[i+1]-w[i]| = s} refined by last letter.
/// rows[n][i-1] = b_{n,i} (empty for n = 0); totals[n] = b_n.
struct BTable {
  int k = 1;
  int s = 1;
  AbsRegime regime = AbsRegime::kTrivial;
  std::vector<std::vector<QPoly>> rows;
  std::vector<QPoly> totals;
};

BTable b_table(int k, int s, std::size_t n_max);

/// (1+(1-q)x) / (1+(1-q-k)x-(2s-k)(1-q)x^2); small regime only.
RatFunc<QPoly> gf_B_small(int k, int s);

/// b_n at q in the small regime from the Chebyshev form
/// k·α^{(n-1)/2}U_{n-1}(β/2√α) − α^{n/2}U_{n-2}(β/2√α), α = (2s-k)(q-1),
/// β = k+q-1, evaluated square-root free through the scaled polynomials
/// V_m = α^{m/2}U_m(β/2√α), which satisfy V_m = β·V_{m-1} − α·V_{m-2}.
BigRational b_closed_chebyshev(int k, int s, int n, const BigRational& q);

/// Same value with U evaluated literally at β/(2√α). Defined only when α is
/// a nonzero square of a rational; std::nullopt otherwise.
std::optional<BigRational> b_closed_chebyshev_literal(int k, int s, int n, const BigRational& q);

/// H_d(x) at a specialized q (q ≠ 1), as the triple sum over the solution
/// of the tridiagonal system: Σ_ℓ Σ_j Σ_k (−1)^{ℓ+k−j} U_j U_{ℓ−k} /
/// ((1−q) U_{ℓ+1} U_ℓ), with every U evaluated at 1/(2x(1−q)).
RatFunc<BigRational> h_triple_sum(int d, const BigRational& q);

/// H_d(x) in the closed squared form
/// Σ_ℓ x²(1−q)(U_{ℓ+1}+U_ℓ+(−1)^ℓ)² / ((1+2x(1−q))² U_{ℓ+1} U_ℓ).
RatFunc<BigRational> h_squared_form(int d, const BigRational& q);

/// B(x) = 1/(1 − r·H_d − (s−r)·H_{d−1}) with k = ds + r, d ≥ 2, 1 ≤ r ≤ s,
/// at q ≠ 1 (throws SingularSpecialization at q = 1, WrongRegime when
/// k < 2s+1). Uses the triple-sum H.
RatFunc<BigRational> gf_B_large(int k, int s, const BigRational& q);

/// The (d+1)×(d+1) tridiagonal matrix with unit diagonal and x(1−q) on both
/// off-diagonals, and its Chebyshev LU factors.
struct TridiagSystem {
  int d = 0;
  SquareMatrix<BigRational> B;
  SquareMatrix<BigRational> L;
  SquareMatrix<BigRational> U;
};

/// Builds the factors at a rational point. Throws DegeneratePoint when
/// x(1−q) = 0 or some U_i(1/(2x(1−q))), i ≤ d+1, vanishes.
TridiagSystem tridiag_system(int d, const BigRational& x, const BigRational& q);

/// True iff B = L·U exactly at the point.
bool lu_verify(int d, const BigRational& x, const BigRational& q);

}  // namespace adjstat
