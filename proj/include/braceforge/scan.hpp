#ifndef BRACEFORGE_SCAN_HPP
#define BRACEFORGE_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <limits>

// Exhaustive-scan kernels. Every verifier in the library is a search for the
// lexicographically first violating tuple over an index range; these drivers
// run that search chunk by chunk so a hit in an early chunk stops the scan
// while the result stays independent of the thread schedule. Serial reference
// implementations of the main checks live in reference.hpp and are compared
// against these kernels by tests and by the benchmark tool.

namespace braceforge::scan {

inline constexpr std::uint64_t npos = std::numeric_limits<std::uint64_t>::max();

// Smallest i in [0,total) with pred(i) true, or npos.
template <class Pred>
std::uint64_t first_hit(std::uint64_t total, Pred&& pred) {
  const std::uint64_t chunk = std::max<std::uint64_t>(1u << 16, total / 64);
  for (std::uint64_t base = 0; base < total; base += chunk) {
    const std::int64_t lo = static_cast<std::int64_t>(base);
    const std::int64_t hi = static_cast<std::int64_t>(std::min(total, base + chunk));
    std::uint64_t best = npos;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t i = lo; i < hi; ++i) {
      if (pred(static_cast<std::uint64_t>(i))) best = std::min(best, static_cast<std::uint64_t>(i));
    }
    if (best != npos) return best;
  }
  return npos;
}

// Plain parallel sweep, no early exit; body must be thread-safe.
template <class Body>
void for_each(std::uint64_t total, Body&& body) {
  const std::int64_t n = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::uint64_t>(i));
}

// Row-structured search: finder(x) scans its own inner range and returns the
// encoded index of the first violation in row x (or npos). Encodings must be
// monotone in x (row-major), so the minimum over rows is the global
// lexicographic first.
template <class RowFinder>
std::uint64_t first_hit_rows(std::uint64_t rows, RowFinder&& finder) {
  const std::uint64_t chunk = std::max<std::uint64_t>(64, rows / 64);
  for (std::uint64_t base = 0; base < rows; base += chunk) {
    const std::int64_t lo = static_cast<std::int64_t>(base);
    const std::int64_t hi = static_cast<std::int64_t>(std::min(rows, base + chunk));
    std::uint64_t best = npos;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t x = lo; x < hi; ++x)
      best = std::min(best, finder(static_cast<std::uint64_t>(x)));
    if (best != npos) return best;
  }
  return npos;
}

} // namespace braceforge::scan

#endif
