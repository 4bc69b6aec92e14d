#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "adjstat/algebra/chebyshev.hpp"
#include "adjstat/algebra/matrix.hpp"
#include "adjstat/algebra/poly.hpp"
#include "adjstat/algebra/ratfunc.hpp"
#include "adjstat/errors.hpp"
#include "adjstat/kary/adjacency.hpp"
#include "support.hpp"

using namespace adjstat;
using testing::qp;
using testing::rat;

namespace {

using RPoly = Poly<BigRational>;

RPoly rp(std::initializer_list<long> cs) {
  std::vector<BigRational> v;
  for (const long c : cs) v.emplace_back(c);
  return RPoly(std::move(v));
}

std::vector<BigRational> as_rationals(std::initializer_list<long> cs) {
  std::vector<BigRational> v;
  for (const long c : cs) v.emplace_back(c);
  return v;
}

// Sum over permutations with the sign from the inversion count.
template <class R>
R leibniz(const SquareMatrix<R>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  R total = RingTraits<R>::zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    R term = RingTraits<R>::one();
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2) {
      total = total - term;
    } else {
      total = total + term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(BigRational::parse("3/6") == rat(1, 2));
  CHECK(BigRational::parse("-4/2") == rat(-2));
  CHECK(rat(2, -4).to_string() == "-1/2");
  CHECK(rat(6, 3).is_integer());
  CHECK_THROWS_AS(BigRational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("x"), std::invalid_argument);
  CHECK(rat(4, 9).exact_sqrt() == rat(2, 3));
  CHECK_FALSE(rat(2).exact_sqrt().has_value());
}

TEST_CASE("polynomial arithmetic") {
  CHECK(qp({1, 1}) * qp({-1, 1}) == qp({-1, 0, 1}));
  CHECK((qp({1, 2}) - qp({1, 2})).is_zero());
  CHECK(qp({0, 0, 0}).is_zero());
  CHECK(qp({7, 2}).evaluate(rat(1, 2)) == rat(8));
  CHECK(format_poly(qlin(7, 2), "q") == "7 + 2*q");
  CHECK(coefficient_sum(qp({7, 2})) == 9);

  auto [quo, rem] = divmod(rp({-1, 0, 1}), rp({-1, 1}));
  CHECK(quo == rp({1, 1}));
  CHECK(rem.is_zero());
}

TEST_CASE("ring axioms hold on random polynomials") {
  testing::Rng rng(7);
  const auto random_poly = [&rng]() {
    std::vector<BigInt> c;
    const long deg = rng.integer(0, 5);
    for (long i = 0; i <= deg; ++i) c.emplace_back(rng.integer(-20, 20));
    return QPoly(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const QPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    const BigRational t = rng.rational();
    CHECK((a * b).evaluate(t) == a.evaluate(t) * b.evaluate(t));
  }
}

TEST_CASE("rational functions compare in lowest terms") {
  const RatFunc<BigRational> f(rp({-1, 0, 1}), rp({-1, 1}));
  CHECK(f == RatFunc<BigRational>(rp({1, 1})));
  CHECK(f.den().degree() == 0);
}

TEST_CASE("series expansion") {
  SUBCASE("1/(1-3x+x^2)") {
    const RatFunc<BigRational> f(rp({1}), rp({1, -3, 1}));
    CHECK(f.series(4) == as_rationals({1, 3, 8, 21, 55}));
  }
  SUBCASE("geometric") {
    const RatFunc<BigRational> f(rp({1}), rp({1, -1}));
    CHECK(f.series(3) == as_rationals({1, 1, 1, 1}));
  }
  SUBCASE("(1+x)/(1-2x)") {
    const RatFunc<BigRational> f(rp({1, 1}), rp({1, -2}));
    const auto s = f.series(3);
    CHECK(s == as_rationals({1, 3, 6, 12}));
    CHECK(series_consistent(f, s));
  }
  SUBCASE("zero constant term") {
    const RatFunc<BigInt> f(ZPoly{BigInt(1)}, ZPoly{BigInt(0), BigInt(1)});
    CHECK_THROWS_AS(f.series(3), NotExpandable);
  }
  SUBCASE("coefficients in q") {
    const RatFunc<QPoly> f(XQPoly::one(), XQPoly{QPoly::one(), qp({-2, -1})});
    const auto s = f.series(2);
    CHECK(s[2] == qp({4, 4, 1}));
  }
}

TEST_CASE("Chebyshev U") {
  const QPoly t = QPoly::x();
  CHECK(chebyshev_u(0, t) == QPoly::one());
  CHECK(chebyshev_u(2, t) == qp({-1, 0, 4}));
  CHECK(chebyshev_u(5, rat(1)) == rat(6));
  for (int n = 0; n <= 10; ++n) CHECK(chebyshev_u(n, rat(1)) == rat(n + 1));
  const auto table = chebyshev_u_table(3, rat(1, 2));
  CHECK(table[0] == rat(0));
  CHECK(table[1] == rat(1));
}

TEST_CASE("alternating Chebyshev sum") {
  const QPoly t = QPoly::x();
  CHECK(alt_cheb_sum(0, t) == QPoly::one());
  CHECK(alt_cheb_sum(1, t) == qp({1, -2}));
  CHECK(alt_cheb_sum(3, rat(1)) == rat(-2));
  const auto at_one = alt_cheb_sum_closed(3, rat(1));
  CHECK(at_one.numerator / at_one.denominator == rat(-2));

  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const BigRational x = rng.rational();
    if (x == rat(-1)) continue;
    const int n = static_cast<int>(rng.integer(0, 12));
    const auto cf = alt_cheb_sum_closed(n, x);
    CHECK(cf.numerator == alt_cheb_sum(n, x) * cf.denominator);
  }
  CHECK(alt_cheb_sum_closed(4, rat(-1)).denominator.is_zero());
}

TEST_CASE("determinants") {
  CHECK(det_exact(SquareMatrix<BigInt>::identity(3)) == 1);
  CHECK(det_exact(banded_matrix(4, 2)) == ZPoly{BigInt(0), BigInt(0), BigInt(1)});
  CHECK(det_exact(banded_matrix(3, 2)).is_zero());

  SUBCASE("subset expansion agrees with Leibniz") {
    testing::Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = static_cast<std::size_t>(rng.integer(1, 6));
      SquareMatrix<BigInt> m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.integer(-5, 5);
      }
      CHECK(det_exact(m) == leibniz(m));
    }
  }

  SUBCASE("banded matrices match the closed value") {
    for (int s = 1; s <= 4; ++s) {
      for (int m = 1; m <= 8; ++m) {
        const auto mat = banded_matrix(m, s);
        CHECK(det_exact(mat) == banded_det_formula(m, s));
        CHECK(leibniz(mat) == banded_det_formula(m, s));
      }
    }
  }

  SUBCASE("column-replaced system") {
    for (int s = 1; s <= 3; ++s) {
      for (int i = 1; i <= 7; ++i) CHECK(det_exact(cramer_matrix(i, s, i)) == cramer_det_formula(i, s));
    }
  }
}
