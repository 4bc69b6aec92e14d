#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adjstat/algebra/ring.hpp"

namespace adjstat {

/// Dense univariate polynomial over a coefficient ring R. Coefficients are
/// indexed by power; trailing zeros are never stored, so the zero polynomial
/// has an empty coefficient vector and degree -1.
template <class R>
class Poly {
 public:
  using Coeff = R;

  Poly() = default;
  Poly(std::initializer_list<R> cs) : c_(cs) { trim(); }
  explicit Poly(std::vector<R> cs) : c_(std::move(cs)) { trim(); }

  static Poly constant(R c) { return Poly(std::vector<R>{std::move(c)}); }
  static Poly one() { return constant(RingTraits<R>::one()); }
  static Poly x() { return monomial(RingTraits<R>::one(), 1); }
  static Poly monomial(R c, std::size_t deg) {
    std::vector<R> cs(deg + 1, RingTraits<R>::zero());
    cs[deg] = std::move(c);
    return Poly(std::move(cs));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RingTraits<R>::zero(); }
  R operator[](std::size_t i) const { return coeff(i); }
  const R& leading() const { return c_.back(); }

  /// Number of leading zero coefficients (the x-adic valuation). Zero for the
  /// zero polynomial.
  std::size_t valuation() const {
    std::size_t v = 0;
    while (v < c_.size() && RingTraits<R>::is_zero(c_[v])) ++v;
    return v == c_.size() ? 0 : v;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), RingTraits<R>::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), RingTraits<R>::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, RingTraits<R>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (RingTraits<R>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const R& s) const {
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  /// Multiply by x^m.
  Poly shifted(std::size_t m) const {
    if (is_zero()) return Poly();
    std::vector<R> cs(m, RingTraits<R>::zero());
    cs.insert(cs.end(), c_.begin(), c_.end());
    return Poly(std::move(cs));
  }

  /// Divide by x^m; the low m coefficients must be zero.
  Poly unshifted(std::size_t m) const {
    for (std::size_t i = 0; i < std::min(m, c_.size()); ++i) {
      if (!RingTraits<R>::is_zero(c_[i])) {
        throw std::logic_error("Poly::unshifted: nonzero low coefficient");
      }
    }
    if (m >= c_.size()) return Poly();
    return Poly(std::vector<R>(c_.begin() + static_cast<std::ptrdiff_t>(m), c_.end()));
  }

  /// Remainder mod x^{n+1}.
  Poly truncated(std::size_t n) const {
    if (c_.size() <= n + 1) return *this;
    return Poly(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n + 1)));
  }

  /// Substitution x -> c·x.
  Poly rescaled_variable(const R& c) const {
    Poly r = *this;
    R power = RingTraits<R>::one();
    for (auto& coeff : r.c_) {
      coeff = coeff * power;
      power = power * c;
    }
    r.trim();
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      out.push_back(c_[i] * RingTraits<R>::from_int(static_cast<long>(i)));
    }
    return Poly(std::move(out));
  }

  Poly pow(unsigned long e) const { return ring_pow(*this, e); }

  /// Horner evaluation in any ring T that R converts into.
  template <class T>
  T evaluate(const T& at) const {
    T acc = RingTraits<T>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }

  /// Apply f to every coefficient.
  template <class F>
  auto map(F&& f) const -> Poly<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly<S>(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && RingTraits<R>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class S>
struct RingTraits<Poly<S>> {
  static Poly<S> zero() { return Poly<S>(); }
  static Poly<S> one() { return Poly<S>::one(); }
  static Poly<S> from_int(long v) { return Poly<S>::constant(RingTraits<S>::from_int(v)); }
  static bool is_zero(const Poly<S>& p) { return p.is_zero(); }
  static std::optional<Poly<S>> unit_inverse(const Poly<S>& p) {
    if (p.degree() != 0) return std::nullopt;
    auto inv = RingTraits<S>::unit_inverse(p.coeff(0));
    if (!inv) return std::nullopt;
    return Poly<S>::constant(*inv);
  }
  static constexpr bool is_field = false;
};

/// Distribution polynomial in the marker q with integer coefficients.
using QPoly = Poly<BigInt>;
/// Bivariate polynomial in (p, q): outer index is the power of p, inner
/// QPoly carries q.
using PQPoly = Poly<QPoly>;
/// Polynomial in x whose coefficients are polynomials in q.
using XQPoly = Poly<QPoly>;

/// Polynomial a + b·q.
inline QPoly qlin(long a, long b) { return QPoly{BigInt(a), BigInt(b)}; }

/// Coefficient of p^i q^j.
inline BigInt pq_coeff(const PQPoly& f, std::size_t i, std::size_t j) {
  return f.coeff(i).coeff(j);
}

inline BigRational eval_pq(const PQPoly& f, const BigRational& p, const BigRational& q) {
  BigRational acc(0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * p + it->evaluate(q);
  }
  return acc;
}

/// Sum of all coefficients, i.e. the value at 1 (for QPoly: count of the
/// underlying set).
inline BigInt coefficient_sum(const QPoly& f) {
  BigInt s(0);
  for (const auto& c : f.coeffs()) s += c;
  return s;
}

/// Quotient and remainder over a field.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  static_assert(RingTraits<R>::is_field, "divmod needs field coefficients");
  if (b.is_zero()) throw std::domain_error("Poly divmod: division by zero");
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  const R lead_inv = RingTraits<R>::one() / b.leading();
  std::vector<R> quo(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0,
                     RingTraits<R>::zero());
  for (int i = a.degree(); i >= db; --i) {
    const R c = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (RingTraits<R>::is_zero(c)) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = slot - c * b.coeff(static_cast<std::size_t>(j));
    }
  }
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(RingTraits<R>::one() / a.leading());
}

namespace detail {

inline std::string coeff_text(const BigInt& c) { return to_string(c); }
inline std::string coeff_text(const BigRational& c) { return c.to_string(); }
template <class S>
std::string coeff_text(const Poly<S>& c);

template <class R>
bool is_simple(const R&) {
  return true;
}
template <class S>
bool is_simple(const Poly<S>& p) {
  return p.degree() <= 0;
}

}  // namespace detail

/// Human-readable form, e.g. "7 + 2*q". Inner polynomials use "q".
template <class R>
std::string format_poly(const Poly<R>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const R& c = p.coeffs()[i];
    if (RingTraits<R>::is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    std::string ct = detail::coeff_text(c);
    if (!detail::is_simple(c)) ct = "(" + ct + ")";
    if (i == 0) {
      os << ct;
    } else {
      os << ct << "*" << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace detail {
template <class S>
std::string coeff_text(const Poly<S>& c) {
  return format_poly(c, "q");
}
}  // namespace detail

template <class R>
std::ostream& operator<<(std::ostream& os, const Poly<R>& p) {
  return os << format_poly(p, "x");
}

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) {
  return os << format_poly(p, "q");
}

}  // namespace adjstat
