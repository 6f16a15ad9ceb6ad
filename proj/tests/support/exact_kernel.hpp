#pragma once
/// @file exact_kernel.hpp
/// @brief Exact rational kernel computations for small dense matrices,
///        used to cross-check primitive counts against the regular
///        representation.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace nilcox::testsupport {

/// Dimension of {x : A x = 0} for a row-major rational matrix.
inline int kernel_dimension(std::vector<std::vector<mpq_class>> a) {
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    const mpq_class lead = a[rank][c];
    for (std::size_t j = c; j < cols; ++j) a[rank][j] /= lead;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(cols) - static_cast<int>(rank);
}

inline bool in_kernel(const std::vector<std::vector<mpq_class>>& a,
                      const std::vector<mpq_class>& v) {
  for (const auto& row : a) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * v[j];
    if (s != 0) return false;
  }
  return true;
}

} // namespace nilcox::testsupport
