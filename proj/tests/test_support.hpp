#pragma once

#include <cstdint>
#include <vector>

#include "cohom/exact.hpp"

namespace testsupport {

/// Small deterministic generator for property tests (splitmix64).
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  long small(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  cohom::Scalar rational() {
    const long num = small(-5, 5);
    const long den = small(1, 4);
    return cohom::make_scalar(num, den);
  }

  cohom::Matrix matrix(std::size_t rows, std::size_t cols, unsigned zero_percent = 30) {
    cohom::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (below(100) >= zero_percent) m(r, c) = rational();
    return m;
  }

  cohom::Vector vector(std::size_t n) {
    cohom::Vector v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  /// Random combination of the given vectors.
  cohom::Vector combination(const std::vector<cohom::Vector>& basis) {
    cohom::Vector x(basis.front().size());
    for (const auto& b : basis) cohom::axpy(x, rational(), b);
    return x;
  }

 private:
  std::uint64_t state_;
};

/// Rank by fraction-free Bareiss elimination; independent of cohom::rank.
inline std::size_t bareiss_rank(cohom::Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear denominators row by row so all entries are integers.
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) l = lcm(l, mpz_class(m(r, c).get_den()));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) *= l;
  }
  std::size_t rank = 0;
  mpq_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(rank, k));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) m(r, k) = (m(rank, c) * m(r, k) - m(r, c) * m(rank, k)) / prev;
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace testsupport
