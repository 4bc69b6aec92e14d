#include <doctest.h>

#include "adjstat/algebra/ratfunc.hpp"
#include "adjstat/errors.hpp"
#include "adjstat/kary/adjacency.hpp"
#include "adjstat/words/oracle.hpp"
#include "support.hpp"

using namespace adjstat;
using testing::qp;
using testing::rat;

TEST_CASE("word scan") {
  const std::vector<int> w{1, 3, 3, 2, 4};
  const StatBundle b = scan_word(w, 2);
  CHECK(b.mu == 2);
  CHECK(b.nu == 2);
  CHECK(b.lev == 1);
  CHECK(b.asc == 2);
  CHECK(b.des == 1);
}

TEST_CASE("oracle distributions") {
  CHECK(distribution_mu(3, 1, 2) == qp({7, 2}));
  CHECK(distribution_mu(2, 5, 3) == qp({8}));
  CHECK(distribution_mu(3, 2, 2) == qp({8, 1}));
  CHECK(distribution_nu(3, 2, 2) == qp({7, 2}));
  CHECK(distribution_nu(2, 1, 2) == qp({2, 2}));
  CHECK(distribution_nu(4, 9, 5) == qp({1024}));
  CHECK(distribution_gap(2, 1, 2, 3) == qp({6, 2}));
  CHECK(distribution_gap(3, 1, 1, 2) == qp({7, 2}));
  CHECK(distribution_gap(2, 1, 5, 3) == qp({8}));
  CHECK(distribution_mu(3, 1, 0) == qp({1}));
}

TEST_CASE("oracle respects the enumeration cap") {
  EnumerationLimits tight;
  tight.max_objects = 100;
  CHECK_THROWS_AS(distribution_mu(3, 1, 5, tight), EnumerationTooLarge);
  CHECK_NOTHROW(distribution_mu(3, 1, 4, tight));
}

TEST_CASE("avoider counts") {
  CHECK(count_avoiders(4, 2, {{1, 3}, {2, 4}}) == 14);
  CHECK(count_avoiders(3, 0, {{1, 2}}) == 1);
  CHECK(count_avoiders(5, 2, {{1, 3}, {2, 4}, {3, 5}}) == 22);
}

TEST_CASE("oracle invariants") {
  for (int k = 1; k <= 4; ++k) {
    for (int s = 1; s <= 3; ++s) {
      for (int n = 0; n <= 5; ++n) {
        const BigInt all = big_pow(k, static_cast<unsigned long>(n));
        const QPoly mu = distribution_mu(k, s, n);
        const QPoly nu = distribution_nu(k, s, n);
        CHECK(coefficient_sum(mu) == all);
        CHECK(coefficient_sum(nu) == all);
        CHECK(mu.degree() <= std::max(n - 1, 0));
        CHECK(distribution_gap(k, s, 1, n) == mu);
      }
    }
  }
}

TEST_CASE("absolute statistic is symmetric under reversal of the alphabet") {
  for (int k = 2; k <= 4; ++k) {
    for (int s = 1; s < k; ++s) {
      for (int n = 1; n <= 5; ++n) {
        std::vector<BigInt> direct(static_cast<std::size_t>(n), BigInt(0));
        std::vector<BigInt> flipped(static_cast<std::size_t>(n), BigInt(0));
        for_each_word(k, n, [&](std::span<const int> w) {
          std::vector<int> r(w.begin(), w.end());
          for (int& c : r) c = k + 1 - c;
          direct[static_cast<std::size_t>(scan_word(w, s).nu)] += 1;
          flipped[static_cast<std::size_t>(scan_word(r, s).nu)] += 1;
        });
        CHECK(direct == flipped);
      }
    }
  }
}

TEST_CASE("last-letter recurrences") {
  CHECK(a_table(KSParams::make(3, 1), 2).totals[2] == qp({7, 2}));
  CHECK(a_table(KSParams::make(2, 5), 3).totals[3] == qp({8}));
  CHECK(a_table(KSParams::make(3, 2), 2).totals[2] == qp({8, 1}));

  for (int k = 1; k <= 5; ++k) {
    for (int s = 1; s <= 4; ++s) {
      const KSParams p = KSParams::make(k, s);
      const auto table = a_table(p, 6);
      const auto alt = a_rec_alt(p, 6);
      for (int n = 0; n <= 6; ++n) {
        const auto i = static_cast<std::size_t>(n);
        CHECK(table.totals[i] == distribution_mu(k, s, n));
        CHECK(alt[i] == table.totals[i]);
      }
    }
  }
}

TEST_CASE("generating function A") {
  const auto spec = [](const RatFunc<QPoly>& f, long q, std::size_t n) {
    return specialize_q(f.series(n), rat(q));
  };
  CHECK(spec(gf_A(KSParams::make(3, 2)), 0, 4) ==
        std::vector<BigRational>{rat(1), rat(3), rat(8), rat(21), rat(55)});
  CHECK(spec(gf_A(KSParams::make(4, 2)), 0, 4) ==
        std::vector<BigRational>{rat(1), rat(4), rat(14), rat(48), rat(164)});
  for (int k = 2; k <= 5; ++k) {
    const auto at_one = spec(gf_A(KSParams::make(k, 1)), 1, 5);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(at_one[n] == BigRational(big_pow(k, n)));
  }
  const auto five = specialize_q(gf_A_reduced(KSParams::make(5, 2)), rat(0));
  CHECK(five == RatFunc<BigRational>(Poly<BigRational>{rat(1)},
                                     Poly<BigRational>{rat(1), rat(-5), rat(3), rat(-1)}));
  for (int k = 2; k <= 5; ++k) {
    for (int s = 1; s < k; ++s) {
      const KSParams p = KSParams::make(k, s);
      CHECK(gf_A(p).series(7) == a_table(p, 7).totals);
      CHECK(gf_A_reduced(p) == gf_A(p));
    }
  }
}

TEST_CASE("avoidance") {
  const auto a = avoid_count(KSParams::make(4, 2), 6);
  for (std::size_t n = 2; n <= 6; ++n) CHECK(a[n] == 4 * a[n - 1] - 2 * a[n - 2]);
  CHECK(a[2] == 14);
  const auto fib = avoid_count(KSParams::make(3, 2), 8);
  CHECK(fib[8] == 2584);  // F_18
}

TEST_CASE("total occurrences") {
  CHECK(total_occurrences(KSParams::make(3, 1), 2) == 2);
  CHECK(total_occurrences(KSParams::make(3, 2), 2) == 1);
  CHECK(total_occurrences(KSParams::make(2, 1), 1) == 0);
  CHECK(total_occurrences(KSParams::make(2, 3), 5) == 0);
  for (int k = 2; k <= 4; ++k) {
    for (int s = 1; s < k; ++s) {
      for (int n = 1; n <= 6; ++n) CHECK(total_occurrences(KSParams::make(k, s), n) == total_mu(k, s, n));
    }
  }
}

TEST_CASE("gap statistic") {
  CHECK(gap_distribution(KSParams::make(2, 1), 2, 3) == qp({6, 2}));
  CHECK(gap_distribution(KSParams::make(3, 1), 3, 2) == qp({9}));
  for (int n = 0; n <= 6; ++n) {
    const KSParams p = KSParams::make(3, 1);
    CHECK(gap_distribution(p, 1, n) == a_table(p, 6).totals[static_cast<std::size_t>(n)]);
  }
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 6; ++n) CHECK(gap_distribution(KSParams::make(3, 2), r, n) == distribution_gap(3, 2, r, n));
  }
}
