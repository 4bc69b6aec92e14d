#include "adjstat/partitions/partitions.hpp"

#include <stdexcept>
#include <string>

#include "adjstat/errors.hpp"

namespace adjstat {

namespace {

using RFQ = RatFunc<QPoly>;

struct JSplit {
  int jp;   // 1 ≤ j' ≤ s
  int jpp;  // j''
};

JSplit split(int j, int s) {
  const int jpp = (j - 1) / s;
  return {j - jpp * s, jpp};
}

XQPoly xq(const QPoly& c, std::size_t deg) { return XQPoly::monomial(c, deg); }

/// (q-1)x
XQPoly y_term() { return xq(qlin(-1, 1), 1); }

/// 1 + (1-q)x
XQPoly lin_plus() { return XQPoly::one() + xq(qlin(1, -1), 1); }

/// 1 - ((q-1)x)^e
XQPoly one_minus_y_pow(unsigned long e) { return XQPoly::one() - y_term().pow(e); }

/// Σ_{m=0}^{n-1} ((q-1)x)^m
XQPoly geometric_y(int n) {
  XQPoly acc;
  XQPoly p = XQPoly::one();
  const XQPoly y = y_term();
  for (int m = 0; m < n; ++m) {
    acc += p;
    p = p * y;
  }
  return acc;
}

XQPoly d_denominator(int j, int s) {
  const auto [jp, jpp] = split(j, s);
  const XQPoly tail = (lin_plus().scaled(QPoly::constant(BigInt(jp))) - XQPoly::constant(QPoly::constant(BigInt(s)))) *
                      XQPoly::x() * y_term().pow(static_cast<unsigned long>(jpp) + 1);
  return XQPoly::one() - xq(qlin(j - 2, 2), 1) - xq(qlin(j + s - 1, 1) * qlin(1, -1), 2) + tail;
}

void require_partition_regime(int k, int s) {
  if (s < 2 || k < s + 1) {
    throw WrongRegime("partition product needs s >= 2 and k >= s+1 (k=" + std::to_string(k) +
                      ", s=" + std::to_string(s) + ")");
  }
}

XQPoly falling_linear_product(int from, int to) {
  XQPoly acc = XQPoly::one();
  for (int j = from; j <= to; ++j) acc = acc * XQPoly{QPoly::one(), QPoly::constant(BigInt(-j))};
  return acc;
}

/// x^n · occurrences count, visited once per RGF.
void scan_rgfs(int n, std::optional<int> k, int s, const EnumerationLimits& limits,
               const std::function<void(int)>& on_count) {
  for_each_rgf(
      n, k,
      [&](std::span<const int> w) {
        int c = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          if (w[i + 1] - w[i] == s) ++c;
        }
        on_count(c);
      },
      limits);
}

}  // namespace

bool is_rgf(std::span<const int> w) {
  int mx = 0;
  for (const int a : w) {
    if (a < 1 || a > mx + 1) return false;
    if (a > mx) mx = a;
  }
  return true;
}

void for_each_rgf(int n, std::optional<int> k, const std::function<void(std::span<const int>)>& visit,
                  const EnumerationLimits& limits) {
  if (n < 0) throw std::invalid_argument("RGF length must be >= 0");
  if (k && *k < 0) throw std::invalid_argument("block count must be >= 0");
  const StirlingBell sb = StirlingBell::make(n);
  const BigInt family = k ? sb.stirling(n, *k) : sb.bell(n);
  if (family > big_from_u64(limits.max_objects)) {
    throw EnumerationTooLarge("RGF family of length " + std::to_string(n) + " exceeds the cap");
  }
  const int cap = k ? *k : n;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int pos, int mx) {
    if (pos == n) {
      if (!k || mx == *k) visit(w);
      return;
    }
    const int top = std::min(mx + 1, cap);
    for (int a = 1; a <= top; ++a) {
      const int m = std::max(mx, a);
      if (k && m + (n - pos - 1) < *k) continue;
      w[static_cast<std::size_t>(pos)] = a;
      rec(pos + 1, m);
    }
  };
  rec(0, 0);
}

StirlingBell StirlingBell::make(int n_max) {
  if (n_max < 0) throw std::invalid_argument("StirlingBell needs N >= 0");
  const auto n = static_cast<std::size_t>(n_max);
  StirlingBell sb;
  sb.S.assign(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
  sb.S[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      sb.S[i][j] = sb.S[i - 1][j - 1] + BigInt(static_cast<unsigned long>(j)) * sb.S[i - 1][j];
    }
  }
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt b(0);
    for (std::size_t j = 0; j <= i; ++j) b += sb.S[i][j];
    sb.B.push_back(b);
  }
  return sb;
}

const BigInt& StirlingBell::stirling(int n, int k) const {
  static const BigInt zero(0);
  if (n < 0 || k < 0 || k > n) return zero;
  return S.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k));
}

QPoly p_dist_oracle(int n, int k, int s, const EnumerationLimits& limits) {
  std::vector<BigInt> counts;
  scan_rgfs(n, k, s, limits, [&counts](int c) {
    if (counts.size() <= static_cast<std::size_t>(c)) counts.resize(static_cast<std::size_t>(c) + 1, BigInt(0));
    counts[static_cast<std::size_t>(c)] += 1;
  });
  return QPoly(counts);
}

BigInt p_total_oracle(int n, int s, const EnumerationLimits& limits) {
  BigInt total(0);
  scan_rgfs(n, std::nullopt, s, limits, [&total](int c) { total += c; });
  return total;
}

RatFunc<QPoly> partition_D(int j, int s) { return RFQ(XQPoly::one(), d_denominator(j, s)); }

RatFunc<QPoly> partition_E(int j, int s) {
  const XQPoly l = lin_plus();
  return RFQ(l * l, d_denominator(j, s));
}

RatFunc<QPoly> partition_E_prime(int j, int s) {
  if (j < s + 1) throw std::invalid_argument("E'_j needs j >= s+1");
  const int det_index = j - s + 1;
  const XQPoly factor = XQPoly::one() + y_term() * geometric_y((det_index - 1) / s + 1);
  const XQPoly l = lin_plus();
  return RFQ(l * l * factor, d_denominator(j, s));
}

RatFunc<QPoly> gf_P(int k, int s) {
  require_partition_regime(k, s);
  const auto [kp, kpp] = split(k, s);
  XQPoly num = XQPoly::monomial(QPoly::one(), static_cast<std::size_t>(k)) * (XQPoly::one() + y_term()) *
               lin_plus().pow(static_cast<unsigned long>(k - s + 1)) *
               one_minus_y_pow(static_cast<unsigned long>(kpp) + 1).pow(static_cast<unsigned long>(kp - 1));
  for (int l = 1; l <= kpp - 1; ++l) {
    num = num * one_minus_y_pow(static_cast<unsigned long>(l) + 1).pow(static_cast<unsigned long>(s - 1)) *
          one_minus_y_pow(static_cast<unsigned long>(l) + 2);
  }
  XQPoly den = falling_linear_product(1, s);
  for (int j = s + 1; j <= k; ++j) den = den * d_denominator(j, s);
  return RFQ(num, den);
}

RatFunc<QPoly> gf_P_sections(int k, int s) {
  require_partition_regime(k, s);
  RFQ acc(XQPoly::monomial(QPoly::one(), static_cast<std::size_t>(k)) * (XQPoly::one() + y_term()),
          falling_linear_product(1, s));
  acc = acc * partition_E(k, s);
  for (int j = s + 1; j <= k - 1; ++j) acc = acc * partition_E_prime(j, s);
  return acc;
}

BigInt total_pnk(int n, int k, int s) {
  if (s < 2 || k < s + 1 || n < k + 1) {
    throw std::invalid_argument("total_pnk needs s >= 2, k >= s+1, n >= k+1");
  }
  const StirlingBell sb = StirlingBell::make(n);
  BigInt total = BigInt(k - s) * sb.stirling(n - 1, k);
  for (int j = s + 1; j <= k; ++j) {
    for (int t = 0; t <= n - k - 2; ++t) {
      total += sb.stirling(n - t - 2, k) * big_pow(j, static_cast<unsigned long>(t)) * (j - s);
    }
  }
  return total;
}

BigInt q_total(int n, int s) {
  if (s < 2 || s > 4) throw std::invalid_argument("q_total supports s in {2, 3, 4}");
  if (n < 0) throw std::invalid_argument("q_total needs n >= 0");
  if (n < 2) return BigInt(0);
  const StirlingBell sb = StirlingBell::make(n + 1);
  const auto B = [&sb](int i) { return BigRational(sb.bell(i)); };
  const auto two = [](int e) { return BigRational(2).pow(e); };
  BigRational v;
  if (s == 2) {
    v = BigRational(n - 3) * B(n - 1) - BigRational(2 * n - 5) * B(n - 2);
    for (int j = 0; j <= n - 3; ++j) v += B(j);
  } else if (s == 3) {
    v = BigRational(-1, 2) * B(n) + BigRational(2 * n - 13, 2) * B(n - 1) - BigRational(3 * (n - 2)) * B(n - 2) +
        two(n - 2) + BigRational(2);
    for (int j = 1; j <= n - 1; ++j) {
      v += BigRational(binomial(n - 1, j)) * (two(n - 2 - j) + BigRational(2)) * B(j - 1);
    }
  } else {
    // The printed expression at index m gives the total for P_{m+1}.
    const int m = n - 1;
    const auto three = [](int e) { return BigRational(3).pow(e); };
    v = BigRational(-1, 6) * B(m + 2) - B(m + 1) + BigRational(3 * m - 25, 3) * B(m) -
        BigRational(4 * (m - 1)) * B(m - 1) + (three(m) + BigRational(6) * two(m) + BigRational(21)) / BigRational(6);
    for (int j = 1; j <= m; ++j) {
      v += BigRational(binomial(m, j)) * (three(m - j) + BigRational(6) * two(m - j) + BigRational(18)) /
           BigRational(6) * B(j - 1);
    }
  }
  if (!v.is_integer()) {
    throw InternalInvariantViolation("q_total(" + std::to_string(n) + ", " + std::to_string(s) +
                                     ") is not integral: " + v.to_string());
  }
  return v.numerator();
}

RatFunc<QPoly> gf_P_s1(int k) {
  if (k < 2) throw std::invalid_argument("gf_P_s1 needs k >= 2");
  RFQ acc(XQPoly::monomial(QPoly::x(), static_cast<std::size_t>(k)), XQPoly{QPoly::one(), QPoly::constant(BigInt(-1))});
  acc = acc * partition_E(k, 1);
  const RFQ q_minus_one = RFQ::constant(qlin(-1, 1));
  for (int j = 2; j <= k - 1; ++j) acc = acc * (q_minus_one + partition_E_prime(j, 1));
  return acc;
}

RatFunc<QPoly> gf_P_s1_prior(int k) {
  if (k < 2) throw std::invalid_argument("gf_P_s1_prior needs k >= 2");
  const XQPoly x = XQPoly::x();
  XQPoly g_sum;
  for (int i = 1; i <= k; ++i) g_sum += geometric_y(i);
  RFQ acc(XQPoly::monomial(QPoly::one(), static_cast<std::size_t>(k)), XQPoly::one() - x * g_sum);
  const RFQ q_minus_one = RFQ::constant(qlin(-1, 1));
  for (int j = 1; j <= k - 1; ++j) {
    const XQPoly inner_den = XQPoly::one() - xq(qlin(j, 1), 1) + x * geometric_y(j + 1);
    acc = acc * (q_minus_one + RFQ(one_minus_y_pow(static_cast<unsigned long>(j) + 1), inner_den));
  }
  return acc;
}

bool stirling_bell_identity_check(int n_max) {
  if (n_max < 1) throw std::invalid_argument("identity check needs N >= 1");
  const StirlingBell sb = StirlingBell::make(n_max);
  for (int n = 1; n <= n_max; ++n) {
    BigInt lhs(0);
    for (int k = 1; k <= n - 1; ++k) lhs += BigInt(k) * sb.stirling(n - 1, k);
    if (lhs != sb.bell(n) - sb.bell(n - 1)) return false;
  }
  return true;
}

}  // namespace adjstat
