#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "adjstat/algebra/bigint.hpp"

namespace adjstat {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything
  /// else, including a zero denominator.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Integer power; negative exponents invert (zero base throws).
  BigRational pow(long exp) const;
  BigRational inverse() const;

  /// Exact square root when both numerator and denominator are perfect
  /// squares; std::nullopt otherwise.
  std::optional<BigRational> exact_sqrt() const;

  std::string to_string() const;

  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
  }

 private:
  explicit BigRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_;
};

}  // namespace adjstat
