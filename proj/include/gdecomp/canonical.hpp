#pragma once

// Canonical block form of extreme points and the embedding U_m -> U^{m+1}.

#include <cstddef>
#include <string>
#include <vector>

#include "gdecomp/error.hpp"
#include "gdecomp/extremity.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/matrix_ops.hpp"
#include "gdecomp/membership.hpp"
#include "gdecomp/permutation.hpp"
#include "gdecomp/rational.hpp"

namespace gdecomp {

/// permute(A, permutation) = core (+) zero_{m-k}, with k = total sum of A.
struct CanonicalForm {
  Permutation permutation;
  std::size_t saturated_order = 0;
  SymMatrix core;
};

/// The permutation lists nonzero rows first, then zero rows, each group in
/// original order. For an extreme point the nonzero rows are exactly the
/// saturated block, so their count equals the total sum.
inline CanonicalForm canonical_form(const ExtremeWitness& witness) {
  const SymMatrix& a = witness.matrix();
  const std::size_t m = a.order();
  const Rational total = a.total_sum();
  if (!is_integer(total)) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "extreme matrix with non-integral total " + to_string(total));
  }
  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < m; ++i) {
    if (!a.row_is_zero(i)) image.push_back(i);
  }
  const std::size_t k = image.size();
  if (Rational(static_cast<long>(k)) != total) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "extreme matrix has " + std::to_string(k) + " nonzero rows but total " +
                    to_string(total));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (a.row_is_zero(i)) image.push_back(i);
  }
  Permutation pi(std::move(image));
  const SymMatrix block = permute(a, pi);
  SymMatrix core = k == 0 ? SymMatrix::zero(0) : principal_submatrix(block, [&] {
    IndexSet lead(m);
    for (std::size_t i = 0; i < k; ++i) lead.insert(i);
    return lead;
  }());
  return CanonicalForm{std::move(pi), k, std::move(core)};
}

/// Throws NotExtreme unless A passes the U_m criterion.
inline CanonicalForm canonical_form(const SymMatrix& a, std::size_t cap = kDefaultExhaustiveCap) {
  auto witness = certify_extreme(a, Ambient::Um, cap);
  if (!witness) throw Error(ErrorCode::NotExtreme, "canonical form needs an extreme matrix");
  return canonical_form(*witness);
}

namespace detail {

/// Border an extreme point V of U_m with a new last index: 1/2 against every
/// zero row of V, 0 against the saturated block, 1 in the corner.
inline SymMatrix border_vertex(const SymMatrix& v) {
  const std::size_t m = v.order();
  const std::size_t n = m + 1;
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) e[i * n + j] = v(i, j);
    if (v.row_is_zero(i)) e[i * n + m] = e[m * n + i] = Rational(1, 2);
  }
  e[m * n + m] = 1;
  return SymMatrix(n, std::move(e));
}

}  // namespace detail

/// A member of U^{m+1} whose leading m x m block is A: split A into extreme
/// points, border each one, and recombine with the same weights.
inline SymMatrix extend_to_saturated(const SymMatrix& a, std::size_t cap = kDefaultExhaustiveCap) {
  if (!check_Um(a, MembershipMethod::Auto, cap).member) {
    throw Error(ErrorCode::NotMember, "extension needs a member of U_m");
  }
  const ConvexCombination split = krein_milman_decompose(a, Ambient::Um, cap);
  const std::size_t n = a.order() + 1;
  std::vector<Rational> e(n * n);
  for (const auto& term : split.terms) {
    const SymMatrix b = detail::border_vertex(term.vertex);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += term.weight * b.entries()[k];
  }
  return SymMatrix(n, std::move(e));
}

}  // namespace gdecomp
