#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "adjstat/algebra/poly.hpp"

namespace adjstat {

/// A word over {1..k}.
struct Word {
  std::vector<int> letters;
  int k = 0;

  std::size_t size() const { return letters.size(); }
  bool valid() const;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Statistics gathered in a single scan of a word.
struct StatBundle {
  int mu = 0;   // w[i+1] - w[i] == s
  int nu = 0;   // |w[i+1] - w[i]| == s
  int lev = 0;
  int asc = 0;
  int des = 0;
};

StatBundle scan_word(std::span<const int> w, int s);

/// Guard on brute-force family sizes.
struct EnumerationLimits {
  std::uint64_t max_objects = 100'000'000;
};

/// Visit all k^n words of length n in lexicographic order. Throws
/// EnumerationTooLarge when k^n exceeds the limit.
void for_each_word(int k, int n, const std::function<void(std::span<const int>)>& visit,
                   const EnumerationLimits& limits = {});

/// Σ over [k]^n of q^{#i: w[i+1]-w[i] = s}.
QPoly distribution_mu(int k, int s, int n, const EnumerationLimits& limits = {});
/// Σ over [k]^n of q^{#i: |w[i+1]-w[i]| = s}.
QPoly distribution_nu(int k, int s, int n, const EnumerationLimits& limits = {});
/// Σ over [k]^n of q^{#i: w[i+r]-w[i] = s}.
QPoly distribution_gap(int k, int s, int r, int n, const EnumerationLimits& limits = {});

/// Σ over J_n (3-ary words avoiding the adjacent string 1-3) of p^lev q^asc.
PQPoly joint_lev_asc(int n, const EnumerationLimits& limits = {});
/// Σ over J_n of p^lev q^des.
PQPoly joint_lev_des(int n, const EnumerationLimits& limits = {});

using PairSet = std::set<std::pair<int, int>>;

bool avoids_pairs(std::span<const int> w, const PairSet& forbidden);

/// Number of words in [k]^n with no adjacent pair (w[i], w[i+1]) in forbidden.
BigInt count_avoiders(int k, int n, const PairSet& forbidden, const EnumerationLimits& limits = {});

/// Σ over all words of the statistic value (derivative at q = 1).
BigInt total_mu(int k, int s, int n, const EnumerationLimits& limits = {});

}  // namespace adjstat
