// Runs acceptance criteria 1-10 and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adjstat/verify/verify.hpp"

#ifndef ADJSTAT_TEST_BFILE_DIR
#define ADJSTAT_TEST_BFILE_DIR ""
#endif

namespace {

struct Criterion {
  int id;
  const char* title;
  std::function<adjstat::SuiteReport()> run;
};

std::optional<std::string> bfile_dir() {
  if (auto env = adjstat::bfile_dir_from_env()) return env;
  const std::string fallback = ADJSTAT_TEST_BFILE_DIR;
  if (fallback.empty()) return std::nullopt;
  return fallback;
}

}  // namespace

int main() {
  using namespace adjstat;
  const std::vector<Criterion> criteria = {
      {1, "words, signed difference: oracle = DP = closed forms = recurrence", [] { return check_three_way(6, 4, 8); }},
      {2, "avoidance sequences for (3,2), (4,2), (5,2)", [] { return check_avoidance(12, 8); }},
      {3, "total occurrences on words", [] { return check_word_totals(6, 4, 8); }},
      {4, "gap reduction", [] { return check_gap(3, 4, 8); }},
      {5, "level/ascent/descent on J_n", [] { return check_fib(9, 20, 12, 15); }},
      {6, "absolute difference", [] { return check_abs(6, 3, 8, 12, 20, 6); }},
      {7, "set partitions", [] { return check_partitions(9, 10, 4); }},
      {8, "bijections", [] { return check_bijections(10, 12); }},
      {9, "determinants and Chebyshev identity", [] { return check_algebra(12, 4, 10, 12); }},
      {10, "OEIS reconciliation", [] { return check_oeis(bfile_dir(), 20); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport r = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const char* status = r.skipped ? "SKIP" : (r.pass() ? "PASS" : "FAIL");
    std::printf("criterion %2d: %s  %s (%zu checks, %.1fs)", c.id, status, c.title, r.checks.size(), secs);
    if (r.skipped) std::printf(" [%s]", r.skip_reason.c_str());
    std::printf("\n");
    if (!r.pass()) {
      ++failed;
      for (const auto& chk : r.checks) {
        if (!chk.pass) std::printf("    failed: %s (%s): %s\n", chk.name.c_str(), chk.params.c_str(), chk.detail.c_str());
      }
    }
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
