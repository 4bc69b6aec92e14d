#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "adjstat/algebra/ring.hpp"

namespace adjstat {

/// Square matrix over a commutative ring, row-major.
template <class R>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, RingTraits<R>::zero()) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<R>::one();
    return m;
  }

  std::size_t size() const { return n_; }
  R& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("SquareMatrix: size mismatch");
    SquareMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (RingTraits<R>::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < a.n_; ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t n_;
  std::vector<R> a_;
};

/// Exact determinant by Laplace expansion memoized over column subsets:
/// O(2^n · n) ring operations, no division, so it works in any commutative
/// ring (polynomials included). Limited to n ≤ 20.
template <class R>
R det_exact(const SquareMatrix<R>& m) {
  const std::size_t n = m.size();
  if (n == 0) return RingTraits<R>::one();
  if (n > 20) throw std::invalid_argument("det_exact: dimension above 20");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // partial[mask]: signed sum over assignments of rows 0..|mask|-1 to the
  // columns in mask.
  std::vector<R> partial(std::size_t{1} << n, RingTraits<R>::zero());
  std::vector<bool> live(std::size_t{1} << n, false);
  partial[0] = RingTraits<R>::one();
  live[0] = true;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!live[mask]) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t col = 0; col < n; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if (mask & bit) continue;
      const R& entry = m(row, col);
      if (RingTraits<R>::is_zero(entry)) continue;
      // Inversions added: already-placed columns to the right of col.
      const bool odd = (std::popcount(mask >> (col + 1)) & 1) != 0;
      R term = partial[mask] * entry;
      if (odd) {
        partial[mask | bit] = partial[mask | bit] - term;
      } else {
        partial[mask | bit] = partial[mask | bit] + term;
      }
      live[mask | bit] = true;
    }
  }
  return partial[full];
}

}  // namespace adjstat
