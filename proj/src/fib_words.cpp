#include "adjstat/fib/fib_words.hpp"

#include <stdexcept>
#include <string>

#include "adjstat/errors.hpp"

namespace adjstat {

namespace {

using RP = Poly<BigRational>;

const BigInt& at(const std::vector<BigInt>& v, int i) { return v.at(static_cast<std::size_t>(i)); }

BigInt exact_div5(const BigInt& v, const char* what) {
  if (v % 5 != 0) throw InternalInvariantViolation(std::string(what) + " not divisible by 5");
  return v / 5;
}

RP f_denominator(const BigRational& p, const BigRational& q, const BigRational& cubic_q_term) {
  return RP{BigRational(1), BigRational(-3) * p, BigRational(3) * p * p - BigRational(2) * q,
            BigRational(2) * p * q - p * p * p - cubic_q_term};
}

}  // namespace

FibPair FibPair::make(std::size_t n_max) {
  FibPair fp;
  fp.F.reserve(n_max + 2);
  fp.F.push_back(BigInt(0));
  fp.F.push_back(BigInt(1));
  for (std::size_t i = 2; i <= n_max + 1; ++i) fp.F.push_back(fp.F[i - 1] + fp.F[i - 2]);
  fp.L.reserve(n_max + 1);
  fp.L.push_back(BigInt(2));  // F_1 + F_{-1}
  for (std::size_t i = 1; i <= n_max; ++i) fp.L.push_back(fp.F[i + 1] + fp.F[i - 1]);
  fp.F.resize(n_max + 1);
  return fp;
}

std::vector<PQPoly> j_dist_dp(std::size_t n_max) {
  const PQPoly p = PQPoly::x();
  const PQPoly q = PQPoly::constant(QPoly::x());
  std::vector<PQPoly> out{PQPoly::one()};
  if (n_max == 0) return out;
  PQPoly j1 = PQPoly::one();
  PQPoly j2 = PQPoly::one();
  PQPoly j3 = PQPoly::one();
  out.push_back(j1 + j2 + j3);
  for (std::size_t n = 2; n <= n_max; ++n) {
    PQPoly n1 = p * j1 + j2 + j3;
    PQPoly n2 = q * j1 + p * j2 + j3;
    PQPoly n3 = q * j2 + p * j3;
    j1 = std::move(n1);
    j2 = std::move(n2);
    j3 = std::move(n3);
    out.push_back(j1 + j2 + j3);
  }
  return out;
}

RatFunc<BigRational> gf_f(const BigRational& p, const BigRational& q) {
  const RP lin{BigRational(1), BigRational(1) - p};
  return RatFunc<BigRational>(lin.pow(3), f_denominator(p, q, q * q));
}

RatFunc<BigRational> gf_descent(const BigRational& p, const BigRational& q) {
  const RP num{BigRational(0), BigRational(3), BigRational(3) * q - BigRational(6) * p + BigRational(2),
               BigRational(3) * p * p + q * q - BigRational(3) * p * q - BigRational(2) * p + BigRational(1)};
  return RatFunc<BigRational>(num, f_denominator(p, q, q));
}

RatFunc<BigRational> gf_descent_by_substitution(const BigRational& p, const BigRational& q) {
  if (q.is_zero()) throw std::invalid_argument("substitution form needs q != 0");
  const auto f = gf_f(p / q, q.inverse());
  const RatFunc<BigRational> f_qx(f.num().rescaled_variable(q), f.den().rescaled_variable(q));
  return (f_qx - RatFunc<BigRational>(RP::one())) * RatFunc<BigRational>::constant(q.inverse());
}

JTotals totals(int n) {
  if (n < 1) throw std::invalid_argument("totals needs n >= 1");
  const FibPair fp = FibPair::make(static_cast<std::size_t>(2 * n + 2));
  const BigInt m(n - 1);
  JTotals t;
  t.lev = m * at(fp.F, 2 * n);
  t.asc = exact_div5(BigInt(2 * m * at(fp.L, 2 * n) - 4 * at(fp.F, 2 * n - 2)), "ascent total");
  t.des = exact_div5(BigInt(m * at(fp.L, 2 * n + 1) + 4 * at(fp.F, 2 * n - 2)), "descent total");
  return t;
}

bool lucas_identity_check(int n_max) {
  if (n_max < 1) throw std::invalid_argument("lucas_identity_check needs N >= 1");
  const FibPair fp = FibPair::make(static_cast<std::size_t>(2 * n_max));
  for (int n = 1; n <= n_max; ++n) {
    BigInt lhs(0);
    for (int i = 1; i <= n - 1; ++i) lhs += at(fp.F, 2 * i) * at(fp.F, 2 * n - 2 * i);
    lhs *= 5;
    const BigInt rhs = BigInt(n - 1) * at(fp.L, 2 * n) - 2 * at(fp.F, 2 * n - 2);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace adjstat
