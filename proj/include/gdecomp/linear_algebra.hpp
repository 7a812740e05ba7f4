#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gdecomp/rational.hpp"

namespace gdecomp {

/// Rank of a rational matrix by exact Gauss-Jordan elimination. Rows are
/// taken by value and reduced in place.
inline std::size_t exact_rank(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational inv = Rational(1) / rows[rank][c];
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace gdecomp
