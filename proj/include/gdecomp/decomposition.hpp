#pragma once

// Solving (X + X^T)/2 = A with X stochastic or substochastic.
//
// g_decompose handles every member through the flow network: the flow an
// edge-node {i,j} sends to vertex i is x_ij. The inductive constructor
// rebuilds X for an extreme point one saturated row at a time, and
// g_decompose_via_vertices lifts vertex solutions through a convex split.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdecomp/canonical.hpp"
#include "gdecomp/error.hpp"
#include "gdecomp/extremity.hpp"
#include "gdecomp/flow.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/matrix_ops.hpp"
#include "gdecomp/membership.hpp"
#include "gdecomp/rational.hpp"

namespace gdecomp {

enum class DecompMode { Stochastic, Substochastic };

constexpr std::string_view to_string(DecompMode m) {
  return m == DecompMode::Stochastic ? "stochastic" : "substochastic";
}

enum class DecompStatus { Solved, NotMember };

struct DecompResult {
  DecompStatus status = DecompStatus::NotMember;
  std::optional<Matrix> X;
  /// Violating subset; absent for a total-sum mismatch.
  std::optional<IndexSet> certificate;
  MembershipReason reason = MembershipReason::Member;
  DecompMode mode = DecompMode::Stochastic;

  bool solved() const noexcept { return status == DecompStatus::Solved; }
};

/// True iff X >= 0, (X + X^T)/2 = A and every row sum is 1 (stochastic) or
/// at most 1 (substochastic). Throws OrderMismatch for a wrongly sized X.
inline bool verify_decomposition(const SymMatrix& a, const Matrix& x, DecompMode mode) {
  const std::size_t m = a.order();
  if (x.rows() != m || x.cols() != m) {
    throw Error(ErrorCode::OrderMismatch, "X is " + std::to_string(x.rows()) + "x" +
                                              std::to_string(x.cols()) + ", A has order " +
                                              std::to_string(m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (x(i, j) < 0) return false;
      if ((x(i, j) + x(j, i)) / 2 != a(i, j)) return false;
    }
    const Rational r = x.row_sum(i);
    if (mode == DecompMode::Stochastic ? r != 1 : r > 1) return false;
  }
  return true;
}

namespace detail {

inline DecompResult not_member(DecompMode mode, MembershipReason reason,
                               std::optional<IndexSet> cert = std::nullopt) {
  DecompResult r;
  r.status = DecompStatus::NotMember;
  r.reason = reason;
  r.certificate = std::move(cert);
  r.mode = mode;
  return r;
}

inline DecompResult solved(DecompMode mode, Matrix x) {
  DecompResult r;
  r.status = DecompStatus::Solved;
  r.X = std::move(x);
  r.mode = mode;
  return r;
}

}  // namespace detail

/// General solver. Stochastic mode first requires total sum m.
inline DecompResult g_decompose(const SymMatrix& a, DecompMode mode) {
  const std::size_t m = a.order();
  if (mode == DecompMode::Stochastic && a.total_sum() != Rational(static_cast<long>(m))) {
    return detail::not_member(mode, MembershipReason::TotalSumMismatch);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (a(i, i) > 1) {
      return detail::not_member(mode, MembershipReason::ViolatingSubset, IndexSet(m, {i}));
    }
  }
  const FlowNetwork net = build_flow_network(a);
  const FlowResult flow = max_flow(net);
  if (flow.value != net.source_capacity()) {
    return detail::not_member(mode, MembershipReason::ViolatingSubset, flow.cut_vertices(net));
  }
  Matrix x(m, m);
  for (std::size_t i = 0; i < m; ++i) x(i, i) = a(i, i);
  for (std::size_t e = 0; e < net.edge_count(); ++e) {
    const auto [i, j] = net.pairs()[e];
    x(i, j) = flow.arc_flow[net.edge_to_first(e)];
    x(j, i) = flow.arc_flow[net.edge_to_second(e)];
  }
  if (!verify_decomposition(a, x, mode)) {
    throw Error(ErrorCode::InternalInvariantViolation, "flow solution fails verification");
  }
  return detail::solved(mode, std::move(x));
}

namespace detail {

/// Constructor for an extreme point of U^m, already validated by the caller.
inline Matrix inductive_stochastic(const SymMatrix& a) {
  const std::size_t m = a.order();
  // Lexicographically smallest (m-1)-subset first: drop the last index.
  std::optional<std::size_t> dropped;
  for (std::size_t k = m; k-- > 0 && m >= 2;) {
    IndexSet alpha = IndexSet::full(m);
    alpha.erase(k);
    if (principal_sum(a, alpha) == Rational(static_cast<long>(m - 1))) {
      dropped = k;
      break;
    }
  }
  if (!dropped) {
    Matrix x = a.to_matrix();
    for (std::size_t i = 0; i < m; ++i) {
      if (x.row_sum(i) != 1) {
        throw Error(ErrorCode::InternalInvariantViolation,
                    "no saturated block of order m-1 yet row " + std::to_string(i + 1) +
                        " sums to " + to_string(x.row_sum(i)));
      }
    }
    return x;
  }
  const std::size_t i0 = *dropped;
  IndexSet alpha = IndexSet::full(m);
  alpha.erase(i0);
  const Matrix sub = inductive_stochastic(principal_submatrix(a, alpha));
  const auto idx = alpha.members();

  Matrix x(m, m);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t c = 0; c < idx.size(); ++c) x(idx[r], idx[c]) = sub(r, c);
  }
  std::vector<std::size_t> halves;
  bool other = false;
  for (std::size_t j = 0; j < m; ++j) {
    if (j == i0 || a(i0, j) == 0) continue;
    if (a(i0, j) == Rational(1, 2)) {
      halves.push_back(j);
    } else {
      other = true;
    }
  }
  if (a(i0, i0) == 1 && halves.empty() && !other) {
    x(i0, i0) = 1;
  } else if (a(i0, i0) == 0 && halves.size() == 1 && !other) {
    x(i0, halves.front()) = 1;
  } else {
    throw Error(ErrorCode::InternalInvariantViolation,
                "row " + std::to_string(i0 + 1) + " fits neither extension case");
  }
  return x;
}

}  // namespace detail

/// Inductive constructor for A in Extr U^m.
inline DecompResult g_decompose_extreme_inductive(const SymMatrix& a,
                                                  std::size_t cap = kDefaultExhaustiveCap) {
  if (!is_extreme_criterion(a, Ambient::UM, cap).extreme) {
    throw Error(ErrorCode::NotExtreme, "inductive constructor needs an extreme point of U^m");
  }
  Matrix x = detail::inductive_stochastic(a);
  if (!verify_decomposition(a, x, DecompMode::Stochastic)) {
    throw Error(ErrorCode::InternalInvariantViolation, "inductive solution fails verification");
  }
  return detail::solved(DecompMode::Stochastic, std::move(x));
}

/// Substochastic X for A in Extr U_m: solve the saturated core of the
/// canonical form inductively and pad the zero rows with zeros.
inline DecompResult g_decompose_extreme_substochastic(const SymMatrix& a,
                                                      std::size_t cap = kDefaultExhaustiveCap) {
  const CanonicalForm form = canonical_form(a, cap);
  const std::size_t m = a.order();
  const std::size_t k = form.saturated_order;
  Matrix x(m, m);
  if (k > 0) {
    const Matrix core = detail::inductive_stochastic(form.core);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) x(form.permutation(r), form.permutation(c)) = core(r, c);
    }
  }
  if (!verify_decomposition(a, x, DecompMode::Substochastic)) {
    throw Error(ErrorCode::InternalInvariantViolation, "padded solution fails verification");
  }
  return detail::solved(DecompMode::Substochastic, std::move(x));
}

/// X = sum of lambda_i X_i over a convex split of A into extreme points,
/// each X_i from the inductive constructor.
inline DecompResult g_decompose_via_vertices(const SymMatrix& a, DecompMode mode,
                                             std::size_t cap = kDefaultExhaustiveCap) {
  const Ambient ambient = mode == DecompMode::Stochastic ? Ambient::UM : Ambient::Um;
  const MembershipVerdict v = check_membership(a, ambient, MembershipMethod::Auto, cap);
  if (!v.member) return detail::not_member(mode, v.reason, v.certificate);
  const ConvexCombination split = krein_milman_decompose(a, ambient, cap);
  const std::size_t m = a.order();
  Matrix x(m, m);
  for (const auto& term : split.terms) {
    const DecompResult part = mode == DecompMode::Stochastic
                                  ? g_decompose_extreme_inductive(term.vertex, cap)
                                  : g_decompose_extreme_substochastic(term.vertex, cap);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) x(i, j) += term.weight * (*part.X)(i, j);
    }
  }
  if (!verify_decomposition(a, x, mode)) {
    throw Error(ErrorCode::InternalInvariantViolation, "lifted solution fails verification");
  }
  return detail::solved(mode, std::move(x));
}

}  // namespace gdecomp
