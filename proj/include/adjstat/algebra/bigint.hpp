#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace adjstat {

using BigInt = mpz_class;

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt big_pow(long base, unsigned long exp) {
  return big_pow(BigInt(base), exp);
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

}  // namespace adjstat
