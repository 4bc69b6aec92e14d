#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "adjstat/algebra/poly.hpp"
#include "adjstat/algebra/ratfunc.hpp"
#include "adjstat/words/oracle.hpp"

namespace adjstat {

/// True iff w[0] = 1 and each letter is at most one more than the running max.
bool is_rgf(std::span<const int> w);

/// Visit every restricted growth function of length n in lexicographic
/// order, optionally only those with exactly k blocks. n = 0 visits the empty
/// sequence (which has 0 blocks).
void for_each_rgf(int n, std::optional<int> k, const std::function<void(std::span<const int>)>& visit,
                  const EnumerationLimits& limits = {});

/// Stirling numbers of the second kind S(n, k) and Bell numbers, n, k ≤ N.
struct StirlingBell {
  std::vector<std::vector<BigInt>> S;
  std::vector<BigInt> B;

  static StirlingBell make(int n_max);
  const BigInt& stirling(int n, int k) const;
  const BigInt& bell(int n) const { return B.at(static_cast<std::size_t>(n)); }
};

/// Σ over P_{n,k} of q^{#i: π[i+1]-π[i] = s}.
QPoly p_dist_oracle(int n, int k, int s, const EnumerationLimits& limits = {});

/// Σ over all of P_n of #{i : π[i+1]-π[i] = s}.
BigInt p_total_oracle(int n, int s, const EnumerationLimits& limits = {});

/// D_j(x;q) = 1/(1-(j-2+2q)x-(j+s-1+q)(1-q)x^2+(j'(1+(1-q)x)-s)x((q-1)x)^{j''+1})
/// with j = j' + j''s, 1 ≤ j' ≤ s.
RatFunc<QPoly> partition_D(int j, int s);
/// E_j = (1+(1-q)x)^2 · D_j.
RatFunc<QPoly> partition_E(int j, int s);
/// E'_j = E_j · (1 + (q-1)x · Σ_{m=0}^{(j-s)/s} ((q-1)x)^m).
RatFunc<QPoly> partition_E_prime(int j, int s);

/// P_k(x;q) assembled as the closed product
/// x^k(1+(q-1)x)(1+(1-q)x)^{k-s+1}(1-((q-1)x)^{k''+1})^{k'-1} / Π_{j≤s}(1-jx)
///   · Π_{ℓ=1}^{k''-1}(1-((q-1)x)^{ℓ+1})^{s-1}(1-((q-1)x)^{ℓ+2}) · Π_{j=s+1}^k D_j.
/// Requires s ≥ 2 and k ≥ s+1 (WrongRegime otherwise).
RatFunc<QPoly> gf_P(int k, int s);

/// The same P_k built section by section from E_k and the E'_j factors.
RatFunc<QPoly> gf_P_sections(int k, int s);

/// Total occurrences over P_{n,k}:
/// (k-s)S(n-1,k) + Σ_{j=s+1}^k Σ_{t=0}^{n-k-2} S(n-t-2,k) j^t (j-s), n ≥ k+1.
BigInt total_pnk(int n, int k, int s);

/// Total occurrences of a(a+s) over P_n from the Bell-number formulas for
/// s ∈ {2, 3, 4}. Intermediate arithmetic is rational; a non-integral
/// result throws InternalInvariantViolation.
BigInt q_total(int n, int s);

/// s = 1 correction: q x^k E_k/(1-x) · Π_{j=2}^{k-1} (q-1+E'_j), k ≥ 2.
RatFunc<QPoly> gf_P_s1(int k);

/// s = 1 formula in the form quoted from earlier work:
/// x^k / (1 - x Σ_{i=1}^k g_i) · Π_{j=1}^{k-1} (q-1 + (1-y^{j+1}) / (1-x(j+q)+x g_{j+1})),
/// y = (q-1)x, g_i = (1-y^i)/(1-y).
RatFunc<QPoly> gf_P_s1_prior(int k);

/// Σ_{k=1}^{n-1} k·S(n-1,k) = B_n - B_{n-1} for 1 ≤ n ≤ N.
bool stirling_bell_identity_check(int n_max);

}  // namespace adjstat
