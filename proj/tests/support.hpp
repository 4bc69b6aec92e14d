#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "adjstat/algebra/poly.hpp"
#include "adjstat/algebra/rational.hpp"

namespace testing {

inline adjstat::QPoly qp(std::initializer_list<long> cs) {
  std::vector<adjstat::BigInt> v;
  for (const long c : cs) v.emplace_back(c);
  return adjstat::QPoly(std::move(v));
}

inline adjstat::BigRational rat(long n, long d = 1) { return {adjstat::BigInt(n), adjstat::BigInt(d)}; }

/// Small random rationals from a fixed seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  adjstat::BigRational rational() { return rat(integer(-9, 9), integer(1, 9)); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testing
