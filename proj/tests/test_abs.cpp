#include <doctest.h>

#include "adjstat/abs/abs_adjacency.hpp"
#include "adjstat/algebra/ratfunc.hpp"
#include "adjstat/errors.hpp"
#include "adjstat/words/oracle.hpp"
#include "support.hpp"

using namespace adjstat;
using testing::qp;
using testing::rat;

TEST_CASE("regimes") {
  CHECK(abs_regime(2, 3) == AbsRegime::kTrivial);
  CHECK(abs_regime(3, 3) == AbsRegime::kTrivial);
  CHECK(abs_regime(3, 2) == AbsRegime::kSmall);
  CHECK(abs_regime(4, 2) == AbsRegime::kSmall);
  CHECK(abs_regime(5, 2) == AbsRegime::kLarge);
  CHECK(abs_regime(3, 1) == AbsRegime::kLarge);
}

TEST_CASE("last-letter recurrences against the oracle") {
  CHECK(b_table(3, 2, 2).totals[2] == qp({7, 2}));
  CHECK(b_table(2, 1, 2).totals[2] == qp({2, 2}));
  CHECK(b_table(2, 3, 4).totals[4] == qp({16}));
  for (int k = 1; k <= 6; ++k) {
    for (int s = 1; s <= 3; ++s) {
      const BTable t = b_table(k, s, 6);
      for (int n = 0; n <= 6; ++n) CHECK(t.totals[static_cast<std::size_t>(n)] == distribution_nu(k, s, n));
    }
  }
}

TEST_CASE("small regime closed forms") {
  CHECK(gf_B_small(3, 2).series(2)[2] == qp({7, 2}));
  CHECK_THROWS_AS(gf_B_small(5, 2), WrongRegime);
  CHECK(specialize_q(gf_B_small(3, 2), rat(1)) ==
        RatFunc<BigRational>(Poly<BigRational>{rat(1)}, Poly<BigRational>{rat(1), rat(-3)}));

  CHECK(b_closed_chebyshev(4, 2, 1, rat(5, 7)) == rat(4));
  CHECK(b_closed_chebyshev(3, 2, 2, rat(0)) == rat(7));
  CHECK(b_closed_chebyshev(3, 2, 3, rat(1)) == rat(27));

  testing::Rng rng(17);
  for (int s = 1; s <= 3; ++s) {
    for (int k = s + 1; k <= 2 * s; ++k) {
      const BTable t = b_table(k, s, 10);
      CHECK(gf_B_small(k, s).series(10) == t.totals);
      for (int trial = 0; trial < 5; ++trial) {
        const BigRational q = rng.rational();
        for (int n = 1; n <= 10; ++n) {
          const BigRational expected = t.totals[static_cast<std::size_t>(n)].evaluate(q);
          CHECK(b_closed_chebyshev(k, s, n, q) == expected);
          if (const auto lit = b_closed_chebyshev_literal(k, s, n, q)) CHECK(*lit == expected);
        }
      }
    }
  }
}

TEST_CASE("literal Chebyshev form at a square point") {
  // k = 3, s = 2: alpha = q - 1 is the square 1/4 at q = 5/4.
  const BigRational q = rat(5, 4);
  const BTable t = b_table(3, 2, 8);
  for (int n = 1; n <= 8; ++n) {
    const auto lit = b_closed_chebyshev_literal(3, 2, n, q);
    REQUIRE(lit.has_value());
    CHECK(*lit == t.totals[static_cast<std::size_t>(n)].evaluate(q));
  }
  CHECK_FALSE(b_closed_chebyshev_literal(3, 2, 3, rat(3)).has_value());
}

TEST_CASE("two-term recurrence for totals") {
  for (int s = 1; s <= 3; ++s) {
    for (int k = s + 1; k <= 2 * s; ++k) {
      const auto b = b_table(k, s, 9).totals;
      const QPoly beta = qp({k - 1, 1});
      const QPoly alpha = qp({-(2 * s - k), 2 * s - k});
      for (std::size_t n = 3; n <= 9; ++n) CHECK(b[n] == beta * b[n - 1] - alpha * b[n - 2]);
    }
  }
}

TEST_CASE("large regime") {
  const auto five = gf_B_large(5, 2, rat(0)).series(4);
  CHECK(five[0] == rat(1));
  CHECK(five[1] == rat(5));
  CHECK(five[2] == rat(19));
  CHECK(gf_B_large(3, 1, rat(0)).series(2)[2] == rat(5));
  CHECK_THROWS_AS(gf_B_large(5, 2, rat(1)), SingularSpecialization);
  CHECK_THROWS_AS(gf_B_large(4, 2, rat(0)), WrongRegime);

  const BigRational points[] = {rat(0), rat(2), rat(-1), rat(1, 2), rat(-3, 4)};
  for (int s = 1; s <= 3; ++s) {
    for (int k = 2 * s + 1; k <= 7; ++k) {
      const BTable t = b_table(k, s, 10);
      for (const auto& q : points) {
        CHECK(gf_B_large(k, s, q).series(10) == specialize_q(t.totals, q));
      }
    }
  }
}

TEST_CASE("two forms of H agree") {
  testing::Rng rng(23);
  for (int d = 0; d <= 6; ++d) {
    for (int trial = 0; trial < 4; ++trial) {
      BigRational q = rng.rational();
      if (q == rat(1)) q = rat(2);
      CHECK(h_triple_sum(d, q) == h_squared_form(d, q));
    }
  }
  CHECK_THROWS_AS(h_triple_sum(2, rat(1)), SingularSpecialization);
}

TEST_CASE("LU factors of the tridiagonal system") {
  CHECK(lu_verify(1, rat(1, 3), rat(0)));
  CHECK(lu_verify(4, rat(1, 7), rat(-1)));
  CHECK(lu_verify(0, rat(1, 5), rat(3)));
  CHECK_THROWS_AS(tridiag_system(2, rat(1, 2), rat(1)), DegeneratePoint);
  // x(1-q) = 0 leaves no Chebyshev argument.
  CHECK_THROWS_AS(tridiag_system(2, rat(0), rat(0)), DegeneratePoint);

  testing::Rng rng(29);
  int checked = 0;
  while (checked < 20) {
    const BigRational x = rng.rational();
    const BigRational q = rng.rational();
    const int d = static_cast<int>(rng.integer(0, 6));
    try {
      const TridiagSystem sys = tridiag_system(d, x, q);
      CHECK(sys.L * sys.U == sys.B);
      ++checked;
    } catch (const DegeneratePoint&) {
    }
  }
}
