#pragma once

// Saturated index sets (principal sum exactly |alpha|) and the minimal and
// maximal saturated neighbourhoods of an entry. The family is closed under
// union, and under intersection of overlapping members, so both
// neighbourhoods are plain set algebra over the enumerated family.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gdecomp/error.hpp"
#include "gdecomp/grid.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/subset_sums.hpp"

namespace gdecomp {

class SaturationFamily {
 public:
  /// Throws NotMember if some subset is violated, CapExceeded past the cap.
  explicit SaturationFamily(const SymMatrix& a, std::size_t cap = kDefaultExhaustiveCap)
      : order_(a.order()) {
    if (order_ == 0) return;
    const SubsetExcess table(a, cap);
    for (std::uint64_t mask = 1; mask < table.subset_count(); ++mask) {
      const int sign = table.sign(mask);
      if (sign > 0) {
        throw Error(ErrorCode::NotMember,
                    "principal sum over " + IndexSet::from_mask(order_, mask).to_string() +
                        " exceeds its size");
      }
      if (sign == 0) masks_.push_back(mask);
    }
    std::sort(masks_.begin(), masks_.end(), mask_size_then_lex_less);
  }

  std::size_t order() const noexcept { return order_; }
  const std::vector<std::uint64_t>& masks() const noexcept { return masks_; }

  std::vector<IndexSet> sets() const {
    std::vector<IndexSet> out;
    out.reserve(masks_.size());
    for (auto mask : masks_) out.push_back(IndexSet::from_mask(order_, mask));
    return out;
  }

  bool is_saturated(std::uint64_t mask) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask, mask_size_then_lex_less);
  }

  /// Intersection of all saturated supersets of {i, j}; nullopt if none.
  std::optional<std::uint64_t> minimal_mask(std::size_t i, std::size_t j) const {
    return fold(i, j, [](std::uint64_t acc, std::uint64_t m) { return acc & m; });
  }

  /// Union of all saturated supersets of {i, j}; nullopt if none.
  std::optional<std::uint64_t> maximal_mask(std::size_t i, std::size_t j) const {
    return fold(i, j, [](std::uint64_t acc, std::uint64_t m) { return acc | m; });
  }

  std::optional<IndexSet> minimal(std::size_t i, std::size_t j) const {
    auto mask = minimal_mask(i, j);
    if (!mask) return std::nullopt;
    return IndexSet::from_mask(order_, *mask);
  }

  std::optional<IndexSet> maximal(std::size_t i, std::size_t j) const {
    auto mask = maximal_mask(i, j);
    if (!mask) return std::nullopt;
    return IndexSet::from_mask(order_, *mask);
  }

 private:
  template <class Op>
  std::optional<std::uint64_t> fold(std::size_t i, std::size_t j, Op op) const {
    if (i >= order_ || j >= order_) {
      throw Error(ErrorCode::InvalidIndexSet, "entry position outside the matrix");
    }
    const std::uint64_t pair = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
    std::optional<std::uint64_t> acc;
    for (auto mask : masks_) {
      if ((mask & pair) == pair) acc = acc ? op(*acc, mask) : mask;
    }
    return acc;
  }

  std::size_t order_;
  std::vector<std::uint64_t> masks_;
};

/// All nonempty saturated alpha, sorted by (|alpha|, lexicographic).
inline std::vector<IndexSet> saturated_sets(const SymMatrix& a,
                                            std::size_t cap = kDefaultExhaustiveCap) {
  return SaturationFamily(a, cap).sets();
}

/// Positions with i > j are normalised; i == j asks for saturated sets holding i.
inline std::optional<IndexSet> min_sat_neighborhood(const SymMatrix& a, std::size_t i,
                                                    std::size_t j,
                                                    std::size_t cap = kDefaultExhaustiveCap) {
  return SaturationFamily(a, cap).minimal(std::min(i, j), std::max(i, j));
}

inline std::optional<IndexSet> max_sat_neighborhood(const SymMatrix& a, std::size_t i,
                                                    std::size_t j,
                                                    std::size_t cap = kDefaultExhaustiveCap) {
  return SaturationFamily(a, cap).maximal(std::min(i, j), std::max(i, j));
}

struct Neighborhoods {
  IndexSet minimal;
  IndexSet maximal;
};

struct SaturationReport {
  std::vector<IndexSet> saturated_sets;
  /// Every position (i, j) with i <= j; empty when no saturated set holds both.
  std::map<std::pair<std::size_t, std::size_t>, std::optional<Neighborhoods>> by_entry;
};

inline SaturationReport saturation_report(const SymMatrix& a,
                                          std::size_t cap = kDefaultExhaustiveCap) {
  const SaturationFamily family(a, cap);
  SaturationReport report;
  report.saturated_sets = family.sets();
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = i; j < a.order(); ++j) {
      std::optional<Neighborhoods> n;
      if (auto lo = family.minimal(i, j)) n = Neighborhoods{*lo, *family.maximal(i, j)};
      report.by_entry.emplace(std::pair{i, j}, std::move(n));
    }
  }
  return report;
}

/// F_m-matrix: a grid member of U_m whose only saturated index set is the
/// full set (so in particular the total sum is m).
inline bool is_F_matrix(const SymMatrix& a, std::size_t cap = kDefaultExhaustiveCap) {
  if (!on_grid(a)) throw Error(ErrorCode::NotOnGrid, "entries must lie in {0,1/2,1}");
  const SaturationFamily family(a, cap);
  if (a.order() == 0) return false;
  const std::uint64_t full = a.order() == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << a.order()) - 1;
  return family.masks().size() == 1 && family.masks().front() == full;
}

}  // namespace gdecomp
