#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pcat/rational.hpp"

namespace pcat {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Row-reduced copy and rank by exact Gaussian elimination.
inline std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline bool is_invertible(const RationalMatrix& m) {
  return !m.empty() && m.size() == m.front().size() && rank(m) == m.size();
}

}  // namespace pcat
