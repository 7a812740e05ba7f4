#pragma once

// Table of principal-sum excesses over all 2^m subsets, used by every
// exhaustive operation (brute-force membership, saturation, criterion).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gdecomp/error.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/rational.hpp"

namespace gdecomp {

inline void require_within_cap(std::size_t m, std::size_t cap, const char* what) {
  if (m > cap || m > 62) {
    throw Error(ErrorCode::CapExceeded,
                std::string(what) + " enumerates 2^m subsets; order " +
                    std::to_string(m) + " exceeds cap " + std::to_string(cap));
  }
}

/// excess(alpha) = principal_sum(A, alpha) - |alpha|, kept as an integer
/// numerator over the common denominator of A's entries. Entries whose
/// scaled sums fit in 62 bits use int64 storage, otherwise BigInt.
class SubsetExcess {
 public:
  SubsetExcess(const SymMatrix& a, std::size_t cap = kDefaultExhaustiveCap)
      : order_(a.order()) {
    require_within_cap(order_, cap, "subset enumeration");
    scale_ = 1;
    for (const auto& v : a.entries()) {
      scale_ = boost::multiprecision::lcm(scale_, BigInt(denominator(v)));
    }
    std::vector<BigInt> scaled;
    scaled.reserve(a.entries().size());
    BigInt bound = scale_ * static_cast<unsigned long>(order_ + 1);
    for (const auto& v : a.entries()) {
      scaled.push_back(numerator(v) * (scale_ / denominator(v)));
      bound += scaled.back();
    }
    if (bound < BigInt(std::numeric_limits<std::int64_t>::max() / 4)) {
      std::vector<std::int64_t> small(scaled.size());
      for (std::size_t k = 0; k < scaled.size(); ++k) {
        small[k] = static_cast<std::int64_t>(scaled[k]);
      }
      table_ = fill<std::int64_t>(small, static_cast<std::int64_t>(scale_));
    } else {
      table_ = fill<BigInt>(scaled, scale_);
    }
  }

  std::size_t order() const noexcept { return order_; }
  std::uint64_t subset_count() const noexcept { return std::uint64_t{1} << order_; }

  /// Sign of principal_sum - |alpha|: +1 violated, 0 saturated, -1 slack.
  int sign(std::uint64_t mask) const {
    return std::visit(
        [mask](const auto& t) -> int {
          const auto& v = t[mask];
          return v > 0 ? 1 : (v < 0 ? -1 : 0);
        },
        table_);
  }

  bool saturated(std::uint64_t mask) const { return sign(mask) == 0; }
  bool violated(std::uint64_t mask) const { return sign(mask) > 0; }

  /// |alpha| - principal_sum(A, alpha), exact.
  Rational slack(std::uint64_t mask) const {
    BigInt num = std::visit([mask](const auto& t) { return BigInt(t[mask]); }, table_);
    return Rational(BigInt(-num), scale_);
  }

  /// Nonempty subset with the largest excess (smallest slack); the first in
  /// size-then-lex order among ties.
  std::uint64_t argmax_excess() const {
    return std::visit(
        [this](const auto& t) {
          std::uint64_t best = 1;
          for (std::uint64_t mask = 1; mask < t.size(); ++mask) {
            if (t[mask] > t[best] ||
                (t[mask] == t[best] && mask_size_then_lex_less(mask, best))) {
              best = mask;
            }
          }
          return best;
        },
        table_);
  }

  /// Violating subset of minimum cardinality, ties broken lexicographically.
  std::optional<std::uint64_t> smallest_violator() const {
    std::optional<std::uint64_t> best;
    for (std::uint64_t mask = 1; mask < subset_count(); ++mask) {
      if (violated(mask) && (!best || mask_size_then_lex_less(mask, *best))) best = mask;
    }
    return best;
  }

  Rational principal_sum(std::uint64_t mask) const {
    return Rational(static_cast<long>(std::popcount(mask))) - slack(mask);
  }

 private:
  template <class Int>
  std::vector<Int> fill(const std::vector<Int>& b, const Int& scale) const {
    const std::size_t m = order_;
    std::vector<Int> t(std::size_t{1} << m);
    t[0] = 0;
    for (std::uint64_t mask = 1; mask < t.size(); ++mask) {
      const int k = std::countr_zero(mask);
      const std::uint64_t rest = mask & (mask - 1);
      Int cross = 0;
      for (std::uint64_t r = rest; r != 0; r &= r - 1) {
        cross += b[k * m + static_cast<std::size_t>(std::countr_zero(r))];
      }
      t[mask] = t[rest] + b[k * m + k] + cross + cross - scale;
    }
    return t;
  }

  std::size_t order_;
  BigInt scale_;
  std::variant<std::vector<std::int64_t>, std::vector<BigInt>> table_;
};

}  // namespace gdecomp
