#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "knotcx/rational.hpp"

namespace knotcx {

/// Determinant of a square integer matrix (row-major) by Bareiss
/// fraction-free elimination; every division is exact.
inline Integer integer_determinant(std::vector<Integer> a, std::size_t n) {
  if (n == 0) return 1;
  int parity = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap * n + k] == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap * n + j]);
      parity = -parity;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(v);
      }
    }
    prev = a[k * n + k];
  }
  return parity * a[n * n - 1];
}

}  // namespace knotcx
