#pragma once

#include <optional>

#include "adjstat/algebra/bigint.hpp"
#include "adjstat/algebra/rational.hpp"

namespace adjstat {

/// Minimal ring vocabulary shared by the generic containers (polynomials,
/// rational functions, matrices, Chebyshev evaluation). Specialized for each
/// coefficient type that appears in the library.
template <class R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
  static BigInt zero() { return BigInt(0); }
  static BigInt one() { return BigInt(1); }
  static BigInt from_int(long v) { return BigInt(v); }
  static bool is_zero(const BigInt& v) { return sgn(v) == 0; }
  static std::optional<BigInt> unit_inverse(const BigInt& v) {
    if (v == 1 || v == -1) return v;
    return std::nullopt;
  }
  static constexpr bool is_field = false;
};

template <>
struct RingTraits<BigRational> {
  static BigRational zero() { return BigRational(0); }
  static BigRational one() { return BigRational(1); }
  static BigRational from_int(long v) { return BigRational(v); }
  static bool is_zero(const BigRational& v) { return v.is_zero(); }
  static std::optional<BigRational> unit_inverse(const BigRational& v) {
    if (v.is_zero()) return std::nullopt;
    return v.inverse();
  }
  static constexpr bool is_field = true;
};

template <class R>
R ring_pow(R base, unsigned long exp) {
  R result = RingTraits<R>::one();
  while (exp > 0) {
    if (exp & 1UL) result = result * base;
    exp >>= 1;
    if (exp > 0) base = base * base;
  }
  return result;
}

}  // namespace adjstat
