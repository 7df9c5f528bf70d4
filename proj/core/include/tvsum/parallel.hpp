#pragma once

#include <cstddef>
#include <thread>
#include <vector>

#include "tvsum/real.hpp"

namespace tvsum {

/// Runs fn(i) for i in [0, n) across `threads` workers in fixed contiguous
/// blocks. Each index is computed exactly once and lands in a caller-owned
/// slot, so results are identical for any thread count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// Pairwise (balanced binary tree) reduction with a topology fixed by the
/// element count alone, for bit-reproducible sums.
inline Real tree_sum(const std::vector<Real>& xs, std::size_t lo, std::size_t hi,
                     mpfr_prec_t prec) {
  if (lo >= hi) return Real(prec);
  if (hi - lo == 1) return xs[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return tree_sum(xs, lo, mid, prec) + tree_sum(xs, mid, hi, prec);
}

inline Real tree_sum(const std::vector<Real>& xs, mpfr_prec_t prec) {
  return tree_sum(xs, 0, xs.size(), prec);
}

}  // namespace tvsum
