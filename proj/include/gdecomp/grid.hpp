#pragma once

// The finite grid U^{(0,1/2,1)} candidates: symmetric matrices with diagonal
// in {0, 1} and off-diagonal entries in {0, 1/2, 1}. Every extreme point of
// U_m lies on it, which makes exhaustive enumeration complete.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gdecomp/matrix.hpp"
#include "gdecomp/rational.hpp"

namespace gdecomp {

inline const Rational& half() {
  static const Rational value(1, 2);
  return value;
}

/// Diagonal in {0,1}, off-diagonal in {0,1/2,1}. Membership is not checked.
inline bool on_grid(const SymMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = i; j < a.order(); ++j) {
      const Rational& v = a(i, j);
      const bool ok = i == j ? (v == 0 || v == 1) : (v == 0 || v == half() || v == 1);
      if (!ok) return false;
    }
  }
  return true;
}

/// Diagonal zero and every entry in {0, 1/2}: the set U^{(0,1/2)} (sans membership).
inline bool on_half_grid(const SymMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (a(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < a.order(); ++j) {
      if (a(i, j) != 0 && a(i, j) != half()) return false;
    }
  }
  return true;
}

/// Mixed-radix indexing of the grid. Upper-triangular positions are taken
/// row-major with the first position most significant, so increasing index
/// visits matrices in lexicographic row-major entry order.
class GridSpace {
 public:
  explicit GridSpace(std::size_t m) : order_(m) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) positions_.emplace_back(i, j);
    }
    count_ = 1;
    for (const auto& [i, j] : positions_) count_ *= (i == j ? 2 : 3);
  }

  std::size_t order() const noexcept { return order_; }
  std::uint64_t size() const noexcept { return count_; }

  SymMatrix at(std::uint64_t index) const {
    const std::size_t m = order_;
    std::vector<Rational> e(m * m);
    for (std::size_t p = positions_.size(); p-- > 0;) {
      const auto [i, j] = positions_[p];
      const std::uint64_t radix = i == j ? 2 : 3;
      const std::uint64_t digit = index % radix;
      index /= radix;
      Rational v = digit == 0 ? Rational(0) : (i == j || digit == 2 ? Rational(1) : half());
      e[i * m + j] = v;
      e[j * m + i] = v;
    }
    return SymMatrix(m, std::move(e));
  }

 private:
  std::size_t order_;
  std::vector<std::pair<std::size_t, std::size_t>> positions_;
  std::uint64_t count_ = 1;
};

}  // namespace gdecomp
