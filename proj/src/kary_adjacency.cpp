#include "adjstat/kary/adjacency.hpp"

#include <stdexcept>
#include <string>

#include "adjstat/errors.hpp"

namespace adjstat {

namespace {

const QPoly& q_minus_one() {
  static const QPoly v = qlin(-1, 1);
  return v;
}

const QPoly& one_minus_q() {
  static const QPoly v = qlin(1, -1);
  return v;
}

XQPoly xq_const(const QPoly& c) { return XQPoly::constant(c); }

XQPoly xq_monomial(const QPoly& c, std::size_t deg) { return XQPoly::monomial(c, deg); }

}  // namespace

KSParams KSParams::make(int k, int s) {
  if (k < 1 || s < 1) throw std::invalid_argument("k and s must be >= 1");
  KSParams p;
  p.k = k;
  p.s = s;
  p.kpp = (k - 1) / s;
  p.kp = k - s * p.kpp;
  return p;
}

ATable a_table(const KSParams& params, std::size_t n_max) {
  const auto k = static_cast<std::size_t>(params.k);
  const auto s = static_cast<std::size_t>(params.s);
  ATable t;
  t.params = params;
  t.rows.push_back({});
  t.totals.push_back(QPoly::one());
  if (n_max == 0) return t;
  t.rows.emplace_back(k, QPoly::one());
  t.totals.push_back(QPoly::constant(BigInt(params.k)));
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto& prev = t.rows[n - 1];
    const QPoly& prev_total = t.totals[n - 1];
    std::vector<QPoly> row(k);
    QPoly total;
    for (std::size_t i = 1; i <= k; ++i) {
      if (i <= s) {
        row[i - 1] = prev_total;
      } else {
        row[i - 1] = prev_total + q_minus_one() * prev[i - s - 1];
      }
      total += row[i - 1];
    }
    t.rows.push_back(std::move(row));
    t.totals.push_back(std::move(total));
  }
  return t;
}

std::vector<QPoly> a_rec_alt(const KSParams& params, std::size_t n_max) {
  const auto kpp = static_cast<std::size_t>(params.kpp);
  const ATable seed = a_table(params, std::min(n_max, kpp));
  std::vector<QPoly> a(seed.totals.begin(), seed.totals.end());
  std::vector<QPoly> weights;  // (q-1)^i (k - i s)
  for (std::size_t i = 0; i <= kpp; ++i) {
    weights.push_back(q_minus_one().pow(i).scaled(BigInt(params.k - static_cast<int>(i) * params.s)));
  }
  for (std::size_t n = kpp + 1; n <= n_max; ++n) {
    QPoly acc;
    for (std::size_t i = 0; i <= kpp; ++i) acc += weights[i] * a[n - i - 1];
    a.push_back(std::move(acc));
  }
  return a;
}

RatFunc<QPoly> gf_A(const KSParams& params) {
  const XQPoly x = XQPoly::x();
  const XQPoly one = XQPoly::one();
  const XQPoly lin = one + xq_monomial(one_minus_q(), 1);  // 1 + (1-q)x
  const XQPoly num = lin * lin;
  const XQPoly tail =
      (lin.scaled(QPoly::constant(BigInt(params.kp))) - xq_const(QPoly::constant(BigInt(params.s)))) *
      x * xq_monomial(QPoly::one(), 1).scaled(q_minus_one()).pow(static_cast<unsigned long>(params.kpp) + 1);
  const XQPoly den = one - xq_monomial(qlin(params.k - 2, 2), 1) -
                     xq_monomial(qlin(params.k + params.s - 1, 1) * one_minus_q(), 2) + tail;
  return RatFunc<QPoly>(num, den);
}

RatFunc<QPoly> gf_A_reduced(const KSParams& params) {
  XQPoly s_sum;
  for (int i = 0; i <= params.kpp; ++i) {
    const QPoly w = q_minus_one().pow(static_cast<unsigned long>(i)).scaled(BigInt(params.k - i * params.s));
    s_sum += xq_monomial(w, static_cast<std::size_t>(i) + 1);
  }
  return RatFunc<QPoly>(XQPoly::one(), XQPoly::one() - s_sum);
}

std::vector<BigInt> avoid_count(const KSParams& params, std::size_t n_max) {
  const int k = params.k;
  const int s = params.s;
  const int kp = params.kp;
  const int kpp = params.kpp;
  const ATable table = a_table(params, n_max);
  std::vector<BigInt> at_zero;
  at_zero.reserve(n_max + 1);
  for (const auto& a : table.totals) at_zero.push_back(a.coeff(0));

  // Lags 1, 2, k''+2, k''+3 (valid once n ≥ k''+3).
  const std::size_t start = static_cast<std::size_t>(kpp) + 3;
  const BigInt sign = (kpp % 2 == 0) ? BigInt(1) : BigInt(-1);
  std::vector<BigInt> four_term(at_zero.begin(),
                                at_zero.begin() + static_cast<std::ptrdiff_t>(std::min(start, n_max + 1)));
  for (std::size_t n = start; n <= n_max; ++n) {
    const auto lag = [&](std::size_t l) -> const BigInt& { return four_term[n - l]; };
    BigInt v = BigInt(k - 2) * lag(1) + BigInt(k + s - 1) * lag(2) +
               sign * BigInt(kp - s) * lag(static_cast<std::size_t>(kpp) + 2) +
               sign * BigInt(kp) * lag(static_cast<std::size_t>(kpp) + 3);
    four_term.push_back(std::move(v));
  }

  // Alternating recurrence with lags 1..k''+1.
  const std::size_t alt_start = static_cast<std::size_t>(kpp) + 1;
  std::vector<BigInt> alternating(
      at_zero.begin(), at_zero.begin() + static_cast<std::ptrdiff_t>(std::min(alt_start, n_max + 1)));
  for (std::size_t n = alt_start; n <= n_max; ++n) {
    BigInt v(0);
    for (int i = 0; i <= kpp; ++i) {
      const BigInt term = BigInt(k - i * s) * alternating[n - static_cast<std::size_t>(i) - 1];
      v += (i % 2 == 0) ? term : BigInt(-term);
    }
    alternating.push_back(std::move(v));
  }

  if (four_term != at_zero || alternating != at_zero) {
    throw InternalInvariantViolation("avoidance recurrences disagree for k=" + std::to_string(k) +
                                     ", s=" + std::to_string(s));
  }
  return four_term;
}

BigInt total_occurrences(const KSParams& params, int n) {
  if (n < 1) throw std::invalid_argument("total_occurrences needs n >= 1");
  if (params.k <= params.s || n == 1) return BigInt(0);
  return big_pow(params.k, static_cast<unsigned long>(n - 2)) * (params.k - params.s) * (n - 1);
}

QPoly gap_distribution(const KSParams& params, int r, int n) {
  if (r < 1) throw std::invalid_argument("gap r must be >= 1");
  if (n < 0) throw std::invalid_argument("length must be >= 0");
  const int d = n / r;
  const int t = n % r;
  const ATable table = a_table(params, static_cast<std::size_t>(d) + 1);
  const QPoly& ad = table.totals[static_cast<std::size_t>(d)];
  const QPoly& ad1 = table.totals[static_cast<std::size_t>(d) + 1];
  return ad1.pow(static_cast<unsigned long>(t)) * ad.pow(static_cast<unsigned long>(r - t));
}

SquareMatrix<ZPoly> banded_matrix(int m, int s) {
  if (m < 1 || s < 1) throw std::invalid_argument("banded_matrix needs m, s >= 1");
  SquareMatrix<ZPoly> c(static_cast<std::size_t>(m));
  for (int i = 1; i < m; ++i) c(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = ZPoly::one();
  for (int i = s; i <= m; ++i) {
    c(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - s)) = ZPoly::x();
  }
  return c;
}

ZPoly banded_det_formula(int m, int s) {
  if (m % s != 0) return ZPoly();
  const int d = m / s;
  const BigInt sign = ((m - d) % 2 == 0) ? BigInt(1) : BigInt(-1);
  return ZPoly::monomial(sign, static_cast<std::size_t>(d));
}

SquareMatrix<XQPoly> cramer_matrix(int k, int s, int col) {
  if (k < 1 || s < 1 || col < 1 || col > k) throw std::invalid_argument("cramer_matrix: bad indices");
  SquareMatrix<XQPoly> m(static_cast<std::size_t>(k));
  const XQPoly off = xq_monomial(one_minus_q(), 1);
  for (int i = 1; i <= k; ++i) {
    const auto r = static_cast<std::size_t>(i - 1);
    m(r, r) = XQPoly::one();
    if (i - s >= 1) m(r, static_cast<std::size_t>(i - s - 1)) = off;
  }
  for (int i = 1; i <= k; ++i) {
    m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(col - 1)) = XQPoly::one();
  }
  return m;
}

XQPoly cramer_det_formula(int i, int s) {
  if (i < 1) throw std::invalid_argument("cramer_det_formula needs i >= 1");
  const int d = (i - 1) / s;
  const XQPoly step = xq_monomial(q_minus_one(), 1);  // −(1−q)x
  XQPoly acc;
  XQPoly power = XQPoly::one();
  for (int j = 0; j <= d; ++j) {
    acc += power;
    power = power * step;
  }
  return acc;
}

}  // namespace adjstat
