#pragma once

#include <cstddef>
#include <vector>

#include "adjstat/algebra/poly.hpp"
#include "adjstat/algebra/ratfunc.hpp"

namespace adjstat {

/// Fibonacci F_0..F_N and Lucas L_0..L_N.
struct FibPair {
  std::vector<BigInt> F;
  std::vector<BigInt> L;

  static FibPair make(std::size_t n_max);
};

/// j_n(p, q) = Σ_{w ∈ J_n} p^lev q^asc for n = 0..N (j_0 = 1), from the
/// last-letter refinement j_{n,1}, j_{n,2}, j_{n,3}.
std::vector<PQPoly> j_dist_dp(std::size_t n_max);

/// (1+(1-p)x)^3 / (1 - 3px + (3p^2-2q)x^2 + (2pq-p^3-q^2)x^3) at (p, q).
RatFunc<BigRational> gf_f(const BigRational& p, const BigRational& q);

/// Level/descent generating function for n ≥ 1, as the explicit quotient
/// (3x + (3q-6p+2)x^2 + (3p^2+q^2-3pq-2p+1)x^3) /
/// (1 - 3px + (3p^2-2q)x^2 + (2pq-p^3-q)x^3).
RatFunc<BigRational> gf_descent(const BigRational& p, const BigRational& q);

/// (1/q)(f(qx; p/q, 1/q) - 1), built from gf_f. Requires q ≠ 0.
RatFunc<BigRational> gf_descent_by_substitution(const BigRational& p, const BigRational& q);

struct JTotals {
  BigInt lev;
  BigInt asc;
  BigInt des;
};

/// Total levels, ascents and descents over J_n:
/// (n-1)F_{2n}, (2(n-1)L_{2n} - 4F_{2n-2})/5, ((n-1)L_{2n+1} + 4F_{2n-2})/5.
/// Throws InternalInvariantViolation if a division by 5 is inexact.
JTotals totals(int n);

/// 5·Σ_{i=1}^{n-1} F_{2i}F_{2n-2i} = (n-1)L_{2n} - 2F_{2n-2} for 1 ≤ n ≤ N.
bool lucas_identity_check(int n_max);

}  // namespace adjstat
