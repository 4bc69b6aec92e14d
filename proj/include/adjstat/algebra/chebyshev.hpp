#pragma once

#include <stdexcept>
#include <vector>

#include "adjstat/algebra/ring.hpp"

namespace adjstat {

/// U_{-1}..U_n evaluated at t, returned with index shifted by one
/// (result[i] = U_{i-1}(t)). Iterative, so valid over any commutative ring.
template <class T>
std::vector<T> chebyshev_u_table(int n, const T& t) {
  if (n < -1) throw std::invalid_argument("chebyshev_u: index below -1");
  std::vector<T> u;
  u.reserve(static_cast<std::size_t>(n) + 2);
  u.push_back(RingTraits<T>::zero());
  if (n >= 0) u.push_back(RingTraits<T>::one());
  const T two_t = t + t;
  for (int i = 1; i <= n; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i) + 1;
    u.push_back(two_t * u[idx - 1] - u[idx - 2]);
  }
  return u;
}

/// Chebyshev polynomial of the second kind: U_{-1}=0, U_0=1,
/// U_n = 2t·U_{n-1} − U_{n-2}.
template <class T>
T chebyshev_u(int n, const T& t) {
  return chebyshev_u_table(n, t).back();
}

/// Σ_{j=0}^n (−1)^j U_j(t), by direct summation.
template <class T>
T alt_cheb_sum(int n, const T& t) {
  const auto u = chebyshev_u_table(n, t);
  T acc = RingTraits<T>::zero();
  for (int j = 0; j <= n; ++j) {
    const T& uj = u[static_cast<std::size_t>(j) + 1];
    acc = (j % 2 == 0) ? acc + uj : acc - uj;
  }
  return acc;
}

/// Closed form of the alternating sum as an unreduced fraction
/// ((−1)^n(U_{n+1}+U_n)+1) / (2(1+t)); the denominator vanishes at t = −1.
template <class T>
struct AltChebFraction {
  T numerator;
  T denominator;
};

template <class T>
AltChebFraction<T> alt_cheb_sum_closed(int n, const T& t) {
  const auto u = chebyshev_u_table(n + 1, t);
  const T& un1 = u[static_cast<std::size_t>(n) + 2];
  const T& un = u[static_cast<std::size_t>(n) + 1];
  const T one = RingTraits<T>::one();
  T num = (n % 2 == 0) ? (un1 + un) + one : one - (un1 + un);
  T den = (one + t) + (one + t);
  return {std::move(num), std::move(den)};
}

}  // namespace adjstat
