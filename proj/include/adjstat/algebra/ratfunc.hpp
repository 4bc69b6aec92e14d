#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adjstat/algebra/poly.hpp"
#include "adjstat/errors.hpp"

namespace adjstat {

/// Ratio of two polynomials in x over R.
///
/// Over a field (BigRational) every arithmetic result is reduced by the
/// polynomial gcd and the denominator is made monic-at-the-bottom where
/// possible, so intermediate values with poles at x = 0 (Chebyshev values at
/// 1/(2x(1-q))) are fine. Over a non-field ring only common powers of x are
/// cancelled; equality is decided by cross-multiplication in both cases.
template <class R>
class RatFunc {
 public:
  using Coeff = R;
  using P = Poly<R>;

  RatFunc() : num_(), den_(P::one()) {}
  RatFunc(P num) : num_(std::move(num)), den_(P::one()) {}  // NOLINT(google-explicit-constructor)
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
  }

  static RatFunc constant(R c) { return RatFunc(P::constant(std::move(c))); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  RatFunc inverse() const { return RatFunc(P::one()) / *this; }
  RatFunc pow(unsigned long e) const { return ring_pow(*this, e); }

  /// Equality as elements of the fraction field: a/b == c/d iff ad == cb.
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Power-series coefficients c_0..c_n of num/den, via the linear recurrence
  /// den_0·c_m = num_m − Σ_{j≥1} den_j·c_{m−j}.
  std::vector<R> series(std::size_t n) const {
    const auto inv = RingTraits<R>::unit_inverse(den_.coeff(0));
    if (!inv) {
      throw NotExpandable("denominator constant term is not invertible in the coefficient ring");
    }
    std::vector<R> c;
    c.reserve(n + 1);
    const std::size_t dd = den_.size();
    for (std::size_t m = 0; m <= n; ++m) {
      R acc = num_.coeff(m);
      for (std::size_t j = 1; j < dd && j <= m; ++j) {
        acc = acc - den_.coeffs()[j] * c[m - j];
      }
      c.push_back(acc * *inv);
    }
    return c;
  }

  template <class F>
  auto map(F&& f) const -> RatFunc<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    return RatFunc<S>(num_.map(f), den_.map(f));
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = P::one();
      return;
    }
    const std::size_t v = std::min(num_.valuation(), den_.valuation());
    if (v > 0) {
      num_ = num_.unshifted(v);
      den_ = den_.unshifted(v);
    }
    if constexpr (RingTraits<R>::is_field) {
      const P g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
      // Scale so the lowest nonzero denominator coefficient is 1.
      const R low = den_.coeff(den_.valuation());
      if (!(low == RingTraits<R>::one())) {
        const R inv = RingTraits<R>::one() / low;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
      }
    }
  }

  P num_;
  P den_;
};

template <class S>
struct RingTraits<RatFunc<S>> {
  static RatFunc<S> zero() { return RatFunc<S>(); }
  static RatFunc<S> one() { return RatFunc<S>(Poly<S>::one()); }
  static RatFunc<S> from_int(long v) { return RatFunc<S>::constant(RingTraits<S>::from_int(v)); }
  static bool is_zero(const RatFunc<S>& f) { return f.is_zero(); }
  static std::optional<RatFunc<S>> unit_inverse(const RatFunc<S>& f) {
    if (f.is_zero()) return std::nullopt;
    return f.inverse();
  }
  static constexpr bool is_field = RingTraits<S>::is_field;
};

/// Coefficients [x^0..x^n] of f as a power series at x = 0.
template <class R>
std::vector<R> series_expand(const RatFunc<R>& f, std::size_t n) {
  return f.series(n);
}

/// Multiply-back check: num ≡ den · series (mod x^{n+1}).
template <class R>
bool series_consistent(const RatFunc<R>& f, const std::vector<R>& series) {
  if (series.empty()) return true;
  const std::size_t n = series.size() - 1;
  return (f.den() * Poly<R>(series)).truncated(n) == f.num().truncated(n);
}

/// Specialize q in a QPoly-coefficient rational function.
inline RatFunc<BigRational> specialize_q(const RatFunc<QPoly>& f, const BigRational& q) {
  auto at_q = [&q](const QPoly& c) { return c.evaluate(q); };
  return RatFunc<BigRational>(f.num().map(at_q), f.den().map(at_q));
}

/// Specialize q in each coefficient of a QPoly-valued series.
inline std::vector<BigRational> specialize_q(const std::vector<QPoly>& series,
                                             const BigRational& q) {
  std::vector<BigRational> out;
  out.reserve(series.size());
  for (const auto& c : series) out.push_back(c.evaluate(q));
  return out;
}

}  // namespace adjstat
