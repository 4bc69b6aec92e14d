#include <doctest.h>

#include <set>

#include "adjstat/bijections/bijections.hpp"
#include "adjstat/errors.hpp"
#include "adjstat/words/oracle.hpp"

using namespace adjstat;

namespace {

using Words = std::vector<std::vector<int>>;

Words words_where(int k, int n, bool (*pred)(std::span<const int>)) {
  Words out;
  for_each_word(k, n, [&](std::span<const int> w) {
    if (pred(w)) out.emplace_back(w.begin(), w.end());
  });
  return out;
}

// Compositions of n where a part of size m takes 2^m - 1 colors.
std::vector<long> colored_composition_counts(int n_max) {
  std::vector<long> c(static_cast<std::size_t>(n_max) + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 1; m <= n; ++m) c[static_cast<std::size_t>(n)] += ((1L << m) - 1) * c[static_cast<std::size_t>(n - m)];
  }
  return c;
}

}  // namespace

TEST_CASE("compositions to maneuvers") {
  CHECK(composition_to_maneuvers({{{1, {1}}}}).empty());
  CHECK(composition_to_maneuvers({{{1, {1}}, {1, {1}}}}) == ManeuverSeq{1});
  CHECK(composition_to_maneuvers({{{2, {2}}}}) == ManeuverSeq{4});
  CHECK(composition_to_maneuvers({{{2, {1}}}}) == ManeuverSeq{3});
  CHECK(composition_to_maneuvers({{{2, {1, 2}}}}) == ManeuverSeq{2});

  CHECK_THROWS_AS(validate_composition({{{1, {}}}}), InvalidComposition);
  CHECK_THROWS_AS(validate_composition({{{2, {3}}}}), InvalidComposition);
  CHECK_THROWS_AS(validate_composition({{{3, {2, 1}}}}), InvalidComposition);
  CHECK_THROWS_AS(validate_composition({}), InvalidComposition);
}

TEST_CASE("maneuvers to words") {
  CHECK(maneuvers_to_v_word(ManeuverSeq{}).empty());
  CHECK(maneuvers_to_v_word(ManeuverSeq{1, 4}) == std::vector<int>{1, 4});
  CHECK_THROWS_AS(maneuvers_to_v_word(ManeuverSeq{2, 4}), InvalidSequence);
  CHECK_THROWS_AS(validate_maneuvers(ManeuverSeq{3, 4}), InvalidSequence);
  CHECK_THROWS_AS(validate_maneuvers(ManeuverSeq{5}), InvalidSequence);
}

TEST_CASE("V to W") {
  CHECK(v_to_w(std::vector<int>{1, 1, 3}) == std::vector<int>{3, 4, 4});
  CHECK(v_to_w(std::vector<int>{2, 2, 2}) == std::vector<int>{2, 2, 2});
  CHECK(v_to_w(std::vector<int>{1, 3, 1, 2}) == std::vector<int>{3, 4, 1, 2});
  CHECK(w_to_v(std::vector<int>{3, 4, 4}) == std::vector<int>{1, 1, 3});
  CHECK_THROWS_AS(v_to_w(std::vector<int>{2, 4}), InvalidWord);
  CHECK_THROWS_AS(w_to_v(std::vector<int>{1, 3}), InvalidWord);
}

TEST_CASE("the chain is a bijection for small n") {
  const auto counts = colored_composition_counts(9);
  for (int n = 0; n <= 8; ++n) {
    const Words v = words_where(4, n, is_v_word);
    const Words w = words_where(4, n, is_w_word);
    CHECK(v.size() == w.size());
    CHECK(static_cast<long>(v.size()) == counts[static_cast<std::size_t>(n) + 1]);

    std::set<std::vector<int>> images;
    for (const auto& x : v) {
      const auto y = v_to_w(x);
      CHECK(is_w_word(y));
      CHECK(w_to_v(y) == x);
      images.insert(y);
    }
    CHECK(images.size() == w.size());
    for (const auto& y : w) CHECK(v_to_w(w_to_v(y)) == y);

    std::set<std::vector<int>> seqs;
    long compositions = 0;
    for_each_colored_composition(n + 1, [&](const ColoredComposition& c) {
      ++compositions;
      const ManeuverSeq m = composition_to_maneuvers(c);
      CHECK(m.size() == static_cast<std::size_t>(n));
      CHECK(maneuvers_to_composition(m) == c);
      CHECK(is_v_word(maneuvers_to_v_word(m)));
      seqs.insert(m);
    });
    CHECK(compositions == counts[static_cast<std::size_t>(n) + 1]);
    CHECK(seqs.size() == v.size());
  }
}

TEST_CASE("J'' words to tilings") {
  CHECK(jpp_to_tiling(std::vector<int>{2}) == Tiling{Piece::kSquare});
  CHECK(jpp_to_tiling(std::vector<int>{2, 1}) == Tiling{Piece::kDomino});
  CHECK(jpp_to_tiling(std::vector<int>{2, 3}) == Tiling{Piece::kSquare, Piece::kSquare});
  CHECK_THROWS_AS(jpp_to_tiling(std::vector<int>{1}), InvalidWord);
  CHECK_THROWS_AS(jpp_to_tiling(std::vector<int>{2, 2}), InvalidWord);

  std::vector<long> fib{0, 1};
  while (fib.size() < 14) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (int n = 1; n <= 12; ++n) {
    const Words j = words_where(3, n, is_jpp_word);
    CHECK(static_cast<long>(j.size()) == fib[static_cast<std::size_t>(n) + 1]);
    std::set<Tiling> images;
    for (const auto& w : j) {
      const Tiling t = jpp_to_tiling(w);
      CHECK(tiling_length(t) == n);
      CHECK(tiling_to_jpp(t) == w);
      images.insert(t);
    }
    CHECK(images.size() == j.size());
    long tilings = 0;
    for_each_tiling(n, [&](const Tiling&) { ++tilings; });
    CHECK(tilings == static_cast<long>(j.size()));
  }
}

TEST_CASE("string helpers") {
  CHECK(word_to_string(std::vector<int>{3, 4, 4}) == "344");
  CHECK(word_from_string("113") == std::vector<int>{1, 1, 3});
  CHECK_THROWS_AS(word_from_string("1a"), InvalidWord);
  CHECK(tiling_to_string({Piece::kSquare, Piece::kDomino}) == "SD");
  CHECK(composition_to_string({{{2, {1, 2}}, {1, {1}}}}) == "2{1,2} + 1{1}");
}
