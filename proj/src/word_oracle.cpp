#include "adjstat/words/oracle.hpp"

#include <cstdlib>
#include <string>

#include "adjstat/errors.hpp"

namespace adjstat {

namespace {

void check_size(int k, int n, const EnumerationLimits& limits) {
  if (k < 0 || n < 0) throw std::invalid_argument("alphabet size and length must be >= 0");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (k != 0 && total > limits.max_objects / static_cast<std::uint64_t>(k)) {
      throw EnumerationTooLarge(std::to_string(k) + "^" + std::to_string(n) +
                                " words exceed the enumeration cap");
    }
    total *= static_cast<std::uint64_t>(k);
  }
  if (total > limits.max_objects) {
    throw EnumerationTooLarge(std::to_string(k) + "^" + std::to_string(n) +
                              " words exceed the enumeration cap");
  }
}

QPoly from_counts(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> cs;
  cs.reserve(counts.size());
  for (auto c : counts) cs.push_back(big_from_u64(c));
  return QPoly(std::move(cs));
}

template <class Stat>
QPoly distribution(int k, int n, const EnumerationLimits& limits, Stat stat) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for_each_word(k, n, [&](std::span<const int> w) { ++counts[static_cast<std::size_t>(stat(w))]; },
                limits);
  return from_counts(counts);
}

bool in_j(std::span<const int> w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] == 1 && w[i] == 3) return false;
  }
  return true;
}

PQPoly joint_on_j(int n, const EnumerationLimits& limits, bool use_descents) {
  const auto side = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<std::uint64_t>> grid(side, std::vector<std::uint64_t>(side, 0));
  for_each_word(
      3, n,
      [&](std::span<const int> w) {
        if (!in_j(w)) return;
        const StatBundle st = scan_word(w, 1);
        const int second = use_descents ? st.des : st.asc;
        ++grid[static_cast<std::size_t>(st.lev)][static_cast<std::size_t>(second)];
      },
      limits);
  std::vector<QPoly> rows;
  rows.reserve(side);
  for (const auto& row : grid) rows.push_back(from_counts(row));
  return PQPoly(std::move(rows));
}

}  // namespace

bool Word::valid() const {
  for (int a : letters) {
    if (a < 1 || a > k) return false;
  }
  return true;
}

StatBundle scan_word(std::span<const int> w, int s) {
  StatBundle st;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const int d = w[i] - w[i - 1];
    if (d == s) ++st.mu;
    if (std::abs(d) == s) ++st.nu;
    if (d == 0) {
      ++st.lev;
    } else if (d > 0) {
      ++st.asc;
    } else {
      ++st.des;
    }
  }
  if (!w.empty() && st.lev + st.asc + st.des != static_cast<int>(w.size()) - 1) {
    throw InternalInvariantViolation("lev + asc + des != n - 1");
  }
  return st;
}

void for_each_word(int k, int n, const std::function<void(std::span<const int>)>& visit,
                   const EnumerationLimits& limits) {
  check_size(k, n, limits);
  if (n == 0) {
    visit({});
    return;
  }
  if (k == 0) return;
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  while (true) {
    visit(w);
    int pos = n - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == k) {
      w[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
}

QPoly distribution_mu(int k, int s, int n, const EnumerationLimits& limits) {
  return distribution(k, n, limits, [s](std::span<const int> w) { return scan_word(w, s).mu; });
}

QPoly distribution_nu(int k, int s, int n, const EnumerationLimits& limits) {
  return distribution(k, n, limits, [s](std::span<const int> w) { return scan_word(w, s).nu; });
}

QPoly distribution_gap(int k, int s, int r, int n, const EnumerationLimits& limits) {
  if (r < 1) throw std::invalid_argument("gap r must be >= 1");
  return distribution(k, n, limits, [s, r](std::span<const int> w) {
    int count = 0;
    for (std::size_t i = 0; i + static_cast<std::size_t>(r) < w.size(); ++i) {
      if (w[i + static_cast<std::size_t>(r)] - w[i] == s) ++count;
    }
    return count;
  });
}

PQPoly joint_lev_asc(int n, const EnumerationLimits& limits) {
  return joint_on_j(n, limits, false);
}

PQPoly joint_lev_des(int n, const EnumerationLimits& limits) {
  return joint_on_j(n, limits, true);
}

bool avoids_pairs(std::span<const int> w, const PairSet& forbidden) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (forbidden.count({w[i - 1], w[i]})) return false;
  }
  return true;
}

BigInt count_avoiders(int k, int n, const PairSet& forbidden, const EnumerationLimits& limits) {
  for (const auto& [a, b] : forbidden) {
    if (a < 1 || a > k || b < 1 || b > k) {
      throw std::invalid_argument("forbidden pair outside the alphabet");
    }
  }
  std::uint64_t count = 0;
  for_each_word(
      k, n, [&](std::span<const int> w) { count += avoids_pairs(w, forbidden) ? 1 : 0; }, limits);
  return big_from_u64(count);
}

BigInt total_mu(int k, int s, int n, const EnumerationLimits& limits) {
  std::uint64_t total = 0;
  for_each_word(
      k, n, [&](std::span<const int> w) { total += static_cast<std::uint64_t>(scan_word(w, s).mu); },
      limits);
  return big_from_u64(total);
}

}  // namespace adjstat
