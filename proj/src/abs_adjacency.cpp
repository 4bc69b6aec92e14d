#include "adjstat/abs/abs_adjacency.hpp"

#include <stdexcept>
#include <string>

#include "adjstat/algebra/chebyshev.hpp"
#include "adjstat/errors.hpp"

namespace adjstat {

namespace {

using RF = RatFunc<BigRational>;
using RP = Poly<BigRational>;

void require_small(int k, int s) {
  if (abs_regime(k, s) != AbsRegime::kSmall) {
    throw WrongRegime("closed form needs s+1 <= k <= 2s (k=" + std::to_string(k) +
                      ", s=" + std::to_string(s) + ")");
  }
}

/// U_{-1}..U_n at t = 1/(2x(1−q)), as rational functions of x.
std::vector<RF> chebyshev_at_pole(int n, const BigRational& q) {
  const BigRational c = BigRational(1) - q;
  if (c.is_zero()) throw SingularSpecialization("q = 1 makes 1/(2x(1-q)) undefined");
  const RF t(RP::one(), RP{BigRational(0), BigRational(2) * c});
  return chebyshev_u_table(n, t);
}

const RF& u_at(const std::vector<RF>& table, int i) { return table[static_cast<std::size_t>(i) + 1]; }

}  // namespace

AbsRegime abs_regime(int k, int s) {
  if (k < 1 || s < 1) throw std::invalid_argument("k and s must be >= 1");
  if (k <= s) return AbsRegime::kTrivial;
  if (k <= 2 * s) return AbsRegime::kSmall;
  return AbsRegime::kLarge;
}

BTable b_table(int k, int s, std::size_t n_max) {
  BTable t;
  t.k = k;
  t.s = s;
  t.regime = abs_regime(k, s);
  t.rows.push_back({});
  t.totals.push_back(QPoly::one());
  if (n_max == 0) return t;
  const auto ku = static_cast<std::size_t>(k);
  t.rows.emplace_back(ku, QPoly::one());
  t.totals.push_back(QPoly::constant(BigInt(k)));
  const QPoly qm1 = qlin(-1, 1);
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto& prev = t.rows[n - 1];
    const QPoly& prev_total = t.totals[n - 1];
    const auto col = [&prev](int i) -> const QPoly& { return prev[static_cast<std::size_t>(i - 1)]; };
    std::vector<QPoly> row(ku);
    QPoly total;
    for (int i = 1; i <= k; ++i) {
      QPoly v;
      switch (t.regime) {
        case AbsRegime::kTrivial:
          v = prev_total;
          break;
        case AbsRegime::kSmall:
          if (i <= k - s) {
            v = prev_total + qm1 * col(i + s);
          } else if (i <= s) {
            v = prev_total;
          } else {
            v = prev_total + qm1 * col(i - s);
          }
          break;
        case AbsRegime::kLarge:
          if (i <= s) {
            v = prev_total + qm1 * col(i + s);
          } else if (i <= k - s) {
            v = prev_total + qm1 * (col(i - s) + col(i + s));
          } else {
            v = prev_total + qm1 * col(i - s);
          }
          break;
      }
      total += v;
      row[static_cast<std::size_t>(i - 1)] = std::move(v);
    }
    t.rows.push_back(std::move(row));
    t.totals.push_back(std::move(total));
  }
  return t;
}

RatFunc<QPoly> gf_B_small(int k, int s) {
  require_small(k, s);
  const QPoly c = qlin(1, -1);
  const XQPoly num{QPoly::one(), c};
  const XQPoly den{QPoly::one(), qlin(1 - k, -1), c.scaled(BigInt(-(2 * s - k)))};
  return RatFunc<QPoly>(num, den);
}

BigRational b_closed_chebyshev(int k, int s, int n, const BigRational& q) {
  require_small(k, s);
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (n == 0) return BigRational(1);
  const BigRational alpha = BigRational(2 * s - k) * (q - BigRational(1));
  const BigRational beta = BigRational(k) + q - BigRational(1);
  // v_prev = V_{m-2}, v = V_{m-1}; start at V_{-1} = 0, V_0 = 1.
  BigRational v_prev(0);
  BigRational v(1);
  for (int m = 1; m <= n - 1; ++m) {
    BigRational next = beta * v - alpha * v_prev;
    v_prev = std::move(v);
    v = std::move(next);
  }
  // v = V_{n-1}, v_prev = V_{n-2}.
  return BigRational(k) * v - alpha * v_prev;
}

std::optional<BigRational> b_closed_chebyshev_literal(int k, int s, int n, const BigRational& q) {
  require_small(k, s);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const BigRational alpha = BigRational(2 * s - k) * (q - BigRational(1));
  if (alpha.is_zero()) return std::nullopt;
  const auto root = alpha.exact_sqrt();
  if (!root) return std::nullopt;
  const BigRational beta = BigRational(k) + q - BigRational(1);
  const BigRational t = beta / (BigRational(2) * *root);
  const auto u = chebyshev_u_table(n - 1, t);  // U_{-1}..U_{n-1}
  const BigRational& u_n1 = u[static_cast<std::size_t>(n)];
  const BigRational& u_n2 = u[static_cast<std::size_t>(n) - 1];
  return BigRational(k) * root->pow(n - 1) * u_n1 - root->pow(n) * u_n2;
}

RatFunc<BigRational> h_triple_sum(int d, const BigRational& q) {
  if (d < 0) throw std::invalid_argument("d must be >= 0");
  const auto u = chebyshev_at_pole(d + 1, q);
  const RF c = RF::constant(BigRational(1) - q);
  RF h;
  for (int l = 0; l <= d; ++l) {
    RF inner;
    for (int j = 0; j <= l; ++j) {
      for (int kk = 0; kk <= l; ++kk) {
        const RF term = u_at(u, j) * u_at(u, l - kk);
        inner = ((l + kk - j) % 2 == 0) ? inner + term : inner - term;
      }
    }
    h = h + inner / (c * u_at(u, l + 1) * u_at(u, l));
  }
  return h;
}

RatFunc<BigRational> h_squared_form(int d, const BigRational& q) {
  if (d < 0) throw std::invalid_argument("d must be >= 0");
  const auto u = chebyshev_at_pole(d + 1, q);
  const BigRational c = BigRational(1) - q;
  const RF lead(RP::monomial(c, 2));                      // x²(1−q)
  const RF base(RP{BigRational(1), BigRational(2) * c});  // 1 + 2x(1−q)
  const RF base_sq = base * base;
  RF h;
  for (int l = 0; l <= d; ++l) {
    const RF sign = RF::constant(BigRational(l % 2 == 0 ? 1 : -1));
    const RF inner = u_at(u, l + 1) + u_at(u, l) + sign;
    h = h + lead * inner * inner / (base_sq * u_at(u, l + 1) * u_at(u, l));
  }
  return h;
}

RatFunc<BigRational> gf_B_large(int k, int s, const BigRational& q) {
  if (abs_regime(k, s) != AbsRegime::kLarge) {
    throw WrongRegime("large-regime closed form needs k >= 2s+1 (k=" + std::to_string(k) +
                      ", s=" + std::to_string(s) + ")");
  }
  if (q == BigRational(1)) {
    throw SingularSpecialization("q = 1: use b_table, where B(x) = 1/(1-kx)");
  }
  const int d = (k - 1) / s;
  const int r = k - d * s;
  const RF hd = h_triple_sum(d, q);
  const RF hd1 = h_triple_sum(d - 1, q);
  const RF denom = RF(RP::one()) - RF::constant(BigRational(r)) * hd -
                   RF::constant(BigRational(s - r)) * hd1;
  return denom.inverse();
}

TridiagSystem tridiag_system(int d, const BigRational& x, const BigRational& q) {
  if (d < 0) throw std::invalid_argument("d must be >= 0");
  const BigRational w = x * (BigRational(1) - q);
  if (w.is_zero()) throw DegeneratePoint("x(1-q) = 0");
  const BigRational t = (BigRational(2) * w).inverse();
  const auto u = chebyshev_u_table(d + 1, t);
  const auto uv = [&u](int i) -> const BigRational& { return u[static_cast<std::size_t>(i) + 1]; };
  for (int i = 0; i <= d + 1; ++i) {
    if (uv(i).is_zero()) {
      throw DegeneratePoint("U_" + std::to_string(i) + " vanishes at 1/(2x(1-q))");
    }
  }
  const auto n = static_cast<std::size_t>(d) + 1;
  TridiagSystem sys{d, SquareMatrix<BigRational>(n), SquareMatrix<BigRational>(n),
                    SquareMatrix<BigRational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const int ii = static_cast<int>(i);
    sys.B(i, i) = BigRational(1);
    if (i + 1 < n) {
      sys.B(i, i + 1) = w;
      sys.B(i + 1, i) = w;
      sys.U(i, i + 1) = w;
    }
    sys.L(i, i) = BigRational(1);
    if (i > 0) sys.L(i, i - 1) = uv(ii - 1) / uv(ii);
    sys.U(i, i) = w * uv(ii + 1) / uv(ii);
  }
  return sys;
}

bool lu_verify(int d, const BigRational& x, const BigRational& q) {
  const TridiagSystem sys = tridiag_system(d, x, q);
  return sys.L * sys.U == sys.B;
}

}  // namespace adjstat
