#pragma once

// Extreme points of U_m and U^m.
//
// The criterion: A in U_m is extreme iff every entry with 0 < a_ij < 1 has a
// saturated neighbourhood and no two such entries share the same minimal
// saturated neighbourhood. For U^m the same test applies once the total sum
// is m, since Extr U^m = U^m cap Extr U_m.
//
// is_extreme_nullspace is an independent check: A is a vertex iff the only
// symmetric perturbation keeping every tight constraint tight is zero.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gdecomp/error.hpp"
#include "gdecomp/grid.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/linear_algebra.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/matrix_ops.hpp"
#include "gdecomp/membership.hpp"
#include "gdecomp/parallel.hpp"
#include "gdecomp/rational.hpp"
#include "gdecomp/saturation.hpp"
#include "gdecomp/subset_sums.hpp"

namespace gdecomp {

/// Unordered entry position, stored with i <= j (0-based).
struct Position {
  std::size_t i = 0;
  std::size_t j = 0;
  bool diagonal() const noexcept { return i == j; }
  friend auto operator<=>(const Position&, const Position&) = default;
};

struct MissingNeighborhood {
  Position at;
};

struct DuplicateNeighborhood {
  Position first;
  Position second;
};

using ExtremityFailure = std::variant<MissingNeighborhood, DuplicateNeighborhood>;

struct ExtremityReport {
  bool extreme = false;
  /// Positions with 0 < a_ij < 1, row-major over i <= j.
  std::vector<Position> fractional_entries;
  /// Parallel to fractional_entries.
  std::vector<std::optional<IndexSet>> neighborhoods;
  std::optional<ExtremityFailure> failure;
};

namespace detail {

inline void require_ambient_member(const SymMatrix& a, Ambient ambient) {
  if (ambient == Ambient::UM && a.total_sum() != Rational(static_cast<long>(a.order()))) {
    throw Error(ErrorCode::NotMember,
                "total sum " + to_string(a.total_sum()) + " != " + std::to_string(a.order()));
  }
}

inline ExtremityReport criterion_from_family(const SymMatrix& a, const SaturationFamily& family) {
  ExtremityReport report;
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = i; j < a.order(); ++j) {
      if (a(i, j) > 0 && a(i, j) < 1) report.fractional_entries.push_back({i, j});
    }
  }
  std::vector<std::optional<std::uint64_t>> masks;
  for (const auto& p : report.fractional_entries) {
    masks.push_back(family.minimal_mask(p.i, p.j));
    report.neighborhoods.push_back(masks.back()
                                       ? std::optional(IndexSet::from_mask(a.order(), *masks.back()))
                                       : std::nullopt);
  }
  for (std::size_t q = 0; q < masks.size(); ++q) {
    if (!masks[q]) {
      report.failure = MissingNeighborhood{report.fractional_entries[q]};
      return report;
    }
  }
  for (std::size_t q = 0; q < masks.size(); ++q) {
    for (std::size_t p = 0; p < q; ++p) {
      if (*masks[p] == *masks[q]) {
        report.failure =
            DuplicateNeighborhood{report.fractional_entries[p], report.fractional_entries[q]};
        return report;
      }
    }
  }
  report.extreme = true;
  return report;
}

}  // namespace detail

/// Throws NotMember if A is outside the ambient set, CapExceeded past the cap.
inline ExtremityReport is_extreme_criterion(const SymMatrix& a, Ambient ambient = Ambient::Um,
                                            std::size_t cap = kDefaultExhaustiveCap) {
  const SaturationFamily family(a, cap);
  detail::require_ambient_member(a, ambient);
  return detail::criterion_from_family(a, family);
}

/// Vertex test by rank: unknowns are the m(m+1)/2 upper-triangular entries
/// of a symmetric perturbation D; constraints are d_ij = 0 on zero entries
/// and zero change of the principal sum on every saturated subset.
inline bool is_extreme_nullspace(const SymMatrix& a, Ambient ambient = Ambient::Um,
                                 std::size_t cap = kDefaultExhaustiveCap) {
  const std::size_t m = a.order();
  require_within_cap(m, cap, "null-space extremity test");
  if (!check_membership(a, ambient, MembershipMethod::BruteForce, cap).member) {
    throw Error(ErrorCode::NotMember, "matrix is outside the ambient set");
  }
  std::vector<std::vector<std::size_t>> column(m, std::vector<std::size_t>(m));
  std::size_t n = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) column[i][j] = column[j][i] = n++;
  }
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (a(i, j) == 0) {
        std::vector<Rational> r(n);
        r[column[i][j]] = 1;
        rows.push_back(std::move(r));
      }
    }
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const IndexSet alpha = IndexSet::from_mask(m, mask);
    if (principal_sum(a, alpha) != Rational(static_cast<long>(alpha.size()))) continue;
    std::vector<Rational> r(n);
    const auto idx = alpha.members();
    for (std::size_t x = 0; x < idx.size(); ++x) {
      r[column[idx[x]][idx[x]]] += 1;
      for (std::size_t y = x + 1; y < idx.size(); ++y) r[column[idx[x]][idx[y]]] += 2;
    }
    rows.push_back(std::move(r));
  }
  return exact_rank(std::move(rows), n) == n;
}

/// Proof token that a matrix passed the criterion.
class ExtremeWitness {
 public:
  const SymMatrix& matrix() const noexcept { return matrix_; }
  Ambient ambient() const noexcept { return ambient_; }

 private:
  ExtremeWitness(SymMatrix m, Ambient ambient) : matrix_(std::move(m)), ambient_(ambient) {}
  friend std::optional<ExtremeWitness> certify_extreme(const SymMatrix&, Ambient, std::size_t);

  SymMatrix matrix_;
  Ambient ambient_;
};

/// nullopt when A is a member of the ambient set but not extreme; throws
/// NotMember when A is not a member.
inline std::optional<ExtremeWitness> certify_extreme(const SymMatrix& a,
                                                     Ambient ambient = Ambient::Um,
                                                     std::size_t cap = kDefaultExhaustiveCap) {
  if (!is_extreme_criterion(a, ambient, cap).extreme) return std::nullopt;
  return ExtremeWitness(a, ambient);
}

namespace detail {

/// Symmetric perturbation direction read off a failed criterion. A single
/// fractional entry without a saturated neighbourhood moves alone. Two
/// entries sharing a minimal neighbourhood move in opposite directions,
/// weighted so each changes any principal sum containing it by the same
/// amount (a diagonal entry counts once, an off-diagonal pair twice).
inline Matrix split_direction(std::size_t m, const ExtremityFailure& failure) {
  Matrix d(m, m);
  auto put = [&](const Position& p, const Rational& w) {
    d(p.i, p.j) = w;
    d(p.j, p.i) = w;
  };
  if (const auto* missing = std::get_if<MissingNeighborhood>(&failure)) {
    put(missing->at, 1);
  } else {
    const auto& dup = std::get<DuplicateNeighborhood>(failure);
    const bool mixed = dup.first.diagonal() != dup.second.diagonal();
    put(dup.first, mixed && dup.first.diagonal() ? 2 : 1);
    put(dup.second, mixed && dup.second.diagonal() ? -2 : -1);
  }
  return d;
}

/// Change of the principal sum over `mask` per unit step along d.
inline Rational direction_change(const Matrix& d, std::uint64_t mask) {
  Rational c;
  const std::size_t m = d.rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (((mask >> i) & 1U) == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (((mask >> j) & 1U) != 0 && d(i, j) != 0) c += d(i, j);
    }
  }
  return c;
}

inline std::vector<std::uint64_t> support_masks(const Matrix& d) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = i; j < d.cols(); ++j) {
      if (d(i, j) != 0) out.push_back((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
    }
  }
  return out;
}

/// Largest t >= 0 with A + t d in U_m. d must be nonzero.
inline Rational max_step(const SymMatrix& a, const Matrix& d, const SubsetExcess& table) {
  std::optional<Rational> best;
  auto bound = [&](const Rational& t) {
    if (!best || t < *best) best = t;
  };
  const std::size_t m = a.order();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (d(i, j) < 0) bound(a(i, j) / -d(i, j));
    }
  }
  const auto supports = support_masks(d);
  for (std::uint64_t mask = 1; mask < table.subset_count(); ++mask) {
    bool touched = false;
    for (auto s : supports) touched = touched || (mask & s) == s;
    if (!touched) continue;
    const Rational c = direction_change(d, mask);
    if (c > 0) bound(table.slack(mask) / c);
  }
  if (!best) throw Error(ErrorCode::InternalInvariantViolation, "unbounded direction in U_m");
  return *best;
}

inline SymMatrix step(const SymMatrix& a, const Matrix& d, const Rational& t) {
  const std::size_t m = a.order();
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) e[i * m + j] += t * d(i, j);
  }
  return SymMatrix(m, std::move(e));
}

inline Matrix negated(const Matrix& d) {
  Matrix out = d;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) out(i, j) = -d(i, j);
  }
  return out;
}

}  // namespace detail

struct SplitResult {
  SymMatrix plus;   // A + eps0 * D
  SymMatrix minus;  // A - eps0 * D
  Rational epsilon;
  Matrix direction;
};

/// 2A = plus + minus with both in U_m and distinct. eps0 is half the largest
/// step for which both A + tD and A - tD stay in U_m.
inline SplitResult split_nonextreme(const SymMatrix& a, std::size_t cap = kDefaultExhaustiveCap) {
  const SaturationFamily family(a, cap);
  const ExtremityReport report = detail::criterion_from_family(a, family);
  if (report.extreme) throw Error(ErrorCode::IsExtreme, "nothing to split");
  const SubsetExcess table(a, cap);
  Matrix d = detail::split_direction(a.order(), *report.failure);
  Rational sup = detail::max_step(a, d, table);
  const Rational down = detail::max_step(a, detail::negated(d), table);
  if (down < sup) sup = down;
  const Rational eps = sup / 2;
  return SplitResult{detail::step(a, d, eps), detail::step(a, d, -eps), eps, std::move(d)};
}

struct ConvexTerm {
  Rational weight;
  SymMatrix vertex;
};

struct ConvexCombination {
  std::vector<ConvexTerm> terms;

  Rational weight_sum() const {
    Rational s;
    for (const auto& t : terms) s += t.weight;
    return s;
  }

  SymMatrix reconstruct() const {
    if (terms.empty()) throw Error(ErrorCode::InternalInvariantViolation, "empty combination");
    const std::size_t m = terms.front().vertex.order();
    std::vector<Rational> e(m * m);
    for (const auto& t : terms) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += t.weight * t.vertex.entries()[k];
    }
    return SymMatrix(m, std::move(e));
  }
};

namespace detail {

class VertexPeeler {
 public:
  explicit VertexPeeler(std::size_t cap) : cap_(cap) {}

  const std::vector<ConvexTerm>& peel(const SymMatrix& a) {
    const std::string key = a.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const SaturationFamily family(a, cap_);
    const ExtremityReport report = criterion_from_family(a, family);
    std::vector<ConvexTerm> terms;
    if (report.extreme) {
      terms.push_back({Rational(1), a});
    } else {
      // Saturated sets and zero entries stay tight along d, and each boundary
      // point gains at least one more tight constraint, so recursion ends.
      const SubsetExcess table(a, cap_);
      const Matrix d = split_direction(a.order(), *report.failure);
      const Rational up = max_step(a, d, table);
      const Rational down = max_step(a, negated(d), table);
      const Rational lambda = down / (up + down);
      const SymMatrix far_plus = step(a, d, up);
      const SymMatrix far_minus = step(a, d, -down);
      auto add = [&](const Rational& w, const std::vector<ConvexTerm>& sub) {
        for (const auto& t : sub) {
          const Rational weight = w * t.weight;
          auto same = std::find_if(terms.begin(), terms.end(),
                                   [&](const ConvexTerm& x) { return x.vertex == t.vertex; });
          if (same != terms.end()) {
            same->weight += weight;
          } else {
            terms.push_back({weight, t.vertex});
          }
        }
      };
      const auto plus_terms = peel(far_plus);
      add(lambda, plus_terms);
      const auto minus_terms = peel(far_minus);
      add(Rational(1) - lambda, minus_terms);
    }
    return memo_.emplace(key, std::move(terms)).first->second;
  }

 private:
  std::size_t cap_;
  std::map<std::string, std::vector<ConvexTerm>> memo_;
};

}  // namespace detail

/// Writes A as a convex combination of extreme points by repeated splitting
/// along the criterion's perturbation direction, stepping to the boundary on
/// both sides. Terms appear in the order first reached, '+' side first.
inline ConvexCombination krein_milman_decompose(const SymMatrix& a, Ambient ambient = Ambient::Um,
                                                std::size_t cap = kDefaultExhaustiveCap) {
  const SaturationFamily family(a, cap);
  detail::require_ambient_member(a, ambient);
  detail::VertexPeeler peeler(cap);
  return ConvexCombination{peeler.peel(a)};
}

/// Largest order enumerate_extreme and conjecture_scan accept without force.
inline constexpr std::size_t kEnumerationCap = 4;

/// Grid size 2^m * 3^(m(m-1)/2) as a decimal string (it overflows quickly).
inline std::string grid_size_estimate(std::size_t m) {
  BigInt n = 1;
  for (std::size_t i = 0; i < m; ++i) {
    n *= 2;
    for (std::size_t j = i + 1; j < m; ++j) n *= 3;
  }
  return n.str();
}

/// All extreme points of U_m (or U^m) in lexicographic row-major order.
/// Complete because every extreme point lies on the {0,1/2,1} grid.
inline std::vector<SymMatrix> enumerate_extreme(std::size_t m, Ambient ambient = Ambient::Um,
                                                unsigned threads = 1, bool force = false) {
  if (m > kEnumerationCap && !force) {
    throw Error(ErrorCode::CapExceeded, "enumeration of order " + std::to_string(m) +
                                            " scans " + grid_size_estimate(m) +
                                            " grid matrices; pass force to proceed");
  }
  if (m == 0) return {};
  const GridSpace grid(m);
  auto chunks = detail::map_chunks(grid.size(), threads, [&](std::uint64_t b, std::uint64_t e) {
    std::vector<SymMatrix> found;
    for (std::uint64_t k = b; k < e; ++k) {
      SymMatrix a = grid.at(k);
      const SubsetExcess table(a, m);
      bool member = true;
      for (std::uint64_t mask = 1; mask < table.subset_count() && member; ++mask) {
        member = !table.violated(mask);
      }
      if (!member) continue;
      if (ambient == Ambient::UM && a.total_sum() != Rational(static_cast<long>(m))) continue;
      const SaturationFamily family(a, m);
      if (detail::criterion_from_family(a, family).extreme) found.push_back(std::move(a));
    }
    return found;
  });
  std::vector<SymMatrix> out;
  for (auto& c : chunks) {
    for (auto& a : c) out.push_back(std::move(a));
  }
  return out;
}

struct ScanReport {
  std::size_t order = 0;
  std::uint64_t grid_size = 0;
  std::uint64_t members_lower = 0;   // grid matrices in U_m
  std::uint64_t members_upper = 0;   // grid matrices in U^m
  std::uint64_t extreme_lower = 0;   // ... extreme in U_m
  std::uint64_t extreme_upper = 0;   // ... extreme in U^m
  /// Grid members where the U_m conjecture disagrees with the criterion.
  std::vector<SymMatrix> counterexamples_lower;
  /// Grid members of U^m where the U^m conjecture disagrees.
  std::vector<SymMatrix> counterexamples_upper;
};

/// True iff some saturated principal submatrix has zero diagonal and all
/// entries in {0, 1/2}.
inline bool has_half_grid_saturated_block(const SymMatrix& a, const SaturationFamily& family) {
  for (auto mask : family.masks()) {
    if (on_half_grid(principal_submatrix(a, IndexSet::from_mask(a.order(), mask)))) return true;
  }
  return false;
}

/// Compares the conjectured characterisations of Extr U_m and Extr U^m
/// against the criterion on every grid matrix of order m.
///   U_m:  extreme <=> every 1/2 entry has a saturated neighbourhood and no
///         saturated principal submatrix lies in U^{(0,1/2)}.
///   U^m:  extreme <=> no saturated principal submatrix lies in U^{(0,1/2)}.
inline ScanReport conjecture_scan(std::size_t m, unsigned threads = 1, bool force = false) {
  if (m > kEnumerationCap && !force) {
    throw Error(ErrorCode::CapExceeded, "conjecture scan of order " + std::to_string(m) +
                                            " scans " + grid_size_estimate(m) +
                                            " grid matrices; pass force to proceed");
  }
  const GridSpace grid(m);
  auto chunks = detail::map_chunks(grid.size(), threads, [&](std::uint64_t b, std::uint64_t e) {
    ScanReport part;
    for (std::uint64_t k = b; k < e; ++k) {
      const SymMatrix a = grid.at(k);
      const SubsetExcess table(a, m);
      bool member = true;
      for (std::uint64_t mask = 1; mask < table.subset_count() && member; ++mask) {
        member = !table.violated(mask);
      }
      if (!member) continue;
      ++part.members_lower;
      const SaturationFamily family(a, m);
      const bool extreme = detail::criterion_from_family(a, family).extreme;
      if (extreme) ++part.extreme_lower;

      bool halves_covered = true;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          if (a(i, j) == half() && !family.minimal_mask(i, j)) halves_covered = false;
        }
      }
      const bool half_block = has_half_grid_saturated_block(a, family);
      if (extreme != (halves_covered && !half_block)) part.counterexamples_lower.push_back(a);

      if (a.total_sum() == Rational(static_cast<long>(m))) {
        ++part.members_upper;
        if (extreme) ++part.extreme_upper;
        if (extreme != !half_block) part.counterexamples_upper.push_back(a);
      }
    }
    return part;
  });
  ScanReport out;
  out.order = m;
  out.grid_size = grid.size();
  for (auto& c : chunks) {
    out.members_lower += c.members_lower;
    out.members_upper += c.members_upper;
    out.extreme_lower += c.extreme_lower;
    out.extreme_upper += c.extreme_upper;
    for (auto& x : c.counterexamples_lower) out.counterexamples_lower.push_back(std::move(x));
    for (auto& x : c.counterexamples_upper) out.counterexamples_upper.push_back(std::move(x));
  }
  return out;
}

}  // namespace gdecomp
