#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "adjstat/errors.hpp"
#include "adjstat/oeis/bfile.hpp"
#include "adjstat/verify/verify.hpp"
#include "adjstat/words/oracle.hpp"

using namespace adjstat;

namespace {

// Terms of 1/(1 - c1 x - c2 x^2 - ...) straight from the recurrence.
std::vector<BigInt> linear_recurrence(const std::vector<long>& c, std::size_t count) {
  std::vector<BigInt> u;
  for (std::size_t n = 0; n < count; ++n) {
    BigInt v = (n == 0) ? BigInt(1) : BigInt(0);
    for (std::size_t j = 1; j <= c.size() && j <= n; ++j) v += c[j - 1] * u[n - j];
    u.push_back(v);
  }
  return u;
}

BFile as_bfile(const std::vector<BigInt>& terms, std::int64_t first_index) {
  BFile b;
  for (std::size_t i = 0; i < terms.size(); ++i) b.entries.emplace_back(first_index + static_cast<std::int64_t>(i), terms[i]);
  return b;
}

}  // namespace

TEST_CASE("parsing") {
  const BFile b = parse_bfile("0 1\n1 4\n2 14\n");
  REQUIRE(b.entries.size() == 3);
  CHECK(b.entries[2].first == 2);
  CHECK(b.entries[2].second == 14);
  CHECK(render_bfile(b) == "0 1\n1 4\n2 14\n");

  const BFile c = parse_bfile("# comment\n5 0\n");
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].first == 5);

  try {
    parse_bfile("0 x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(parse_bfile("0 1\n0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_bfile("0 1 2\n"), ParseError);
  CHECK(parse_bfile("\n\n3 123456789012345678901234567890\n").entries[0].second ==
        BigInt("123456789012345678901234567890"));
}

TEST_CASE("generators") {
  CHECK(avoid_sequence(4, 2, 30) == linear_recurrence({4, -2}, 30));
  CHECK(avoid_sequence(3, 2, 30) == linear_recurrence({3, -1}, 30));
  CHECK(avoid_sequence(5, 2, 30) == linear_recurrence({5, -3, 1}, 30));
  for (int k = 1; k <= 4; ++k) {
    const auto seq = avoid_sequence(k, 1, 7);
    PairSet forbidden;
    for (int a = 1; a < k; ++a) forbidden.insert({a, a + 1});
    for (int n = 0; n < 7; ++n) CHECK(seq[static_cast<std::size_t>(n)] == count_avoiders(k, n, forbidden));
  }
  // Anti-diagonals d = 0, 1, 2 of w(n, k), n ascending: 1; 1, 0; 1, 1, 0.
  const auto diag = antidiagonal_s1(6);
  CHECK(diag == std::vector<BigInt>{1, 1, 0, 1, 1, 0});
  CHECK(generator_names().size() == 4);
  CHECK_THROWS(generator("nope"));
}

TEST_CASE("reconciliation") {
  const auto a007070 = linear_recurrence({4, -2}, 30);
  const auto a200676 = linear_recurrence({5, -3, 1}, 30);

  CheckSpec spec = *default_check("A007070");
  spec.length = 10;
  CHECK(reconcile(spec, as_bfile(a007070, 0)).pass());

  spec = *default_check("A200676");
  spec.length = 25;
  CHECK(reconcile(spec, as_bfile(a200676, 3)).pass());
  CHECK_FALSE(reconcile(spec, as_bfile(a200676, 0)).pass());

  auto tampered = as_bfile(a007070, 0);
  tampered.entries[4].second += 1;
  spec = *default_check("A007070");
  const ReconcileReport bad = reconcile(spec, tampered);
  CHECK_FALSE(bad.pass());
  REQUIRE(bad.mismatches.size() == 1);
  CHECK(bad.mismatches[0].index == 4);

  spec.length = 40;
  const ReconcileReport partial = reconcile(spec, as_bfile(a007070, 0));
  CHECK(partial.incomplete);
  CHECK(partial.compared == 30);
  CHECK_FALSE(partial.pass());
}

TEST_CASE("suite over a directory of b-files") {
  const auto dir = std::filesystem::temp_directory_path() / "adjstat_bfiles_test";
  std::filesystem::remove_all(dir);
  CHECK(check_oeis(dir.string()).skipped);

  std::filesystem::create_directories(dir);
  const auto write = [&dir](const std::string& name, const BFile& b) {
    std::ofstream(dir / name) << "# synthetic\n" << render_bfile(b);
  };
  write("b007070.txt", as_bfile(linear_recurrence({4, -2}, 40), 0));
  write("b200676.txt", as_bfile(linear_recurrence({5, -3, 1}, 40), 3));
  write("b277666.txt", as_bfile(antidiagonal_s1(40), 0));
  CHECK(check_oeis(dir.string()).pass());

  std::filesystem::remove(dir / "b277666.txt");
  CHECK_FALSE(check_oeis(dir.string()).pass());
  std::filesystem::remove_all(dir);
}
