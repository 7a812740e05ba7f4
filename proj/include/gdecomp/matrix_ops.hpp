#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gdecomp/error.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/permutation.hpp"
#include "gdecomp/rational.hpp"

namespace gdecomp {

namespace detail {

inline void check_universe(const SymMatrix& a, const IndexSet& alpha) {
  if (alpha.universe() != a.order()) {
    throw Error(ErrorCode::InvalidIndexSet,
                "index set over {1.." + std::to_string(alpha.universe()) +
                    "} used with a matrix of order " + std::to_string(a.order()));
  }
}

}  // namespace detail

/// Sum of a_{ij} over i, j in alpha; 0 for the empty set.
inline Rational principal_sum(const SymMatrix& a, const IndexSet& alpha) {
  detail::check_universe(a, alpha);
  const auto idx = alpha.members();
  Rational s;
  for (std::size_t i : idx) {
    for (std::size_t j : idx) s += a(i, j);
  }
  return s;
}

/// (a_{ij})_{i,j in alpha}, relabelled in increasing order of alpha.
inline SymMatrix principal_submatrix(const SymMatrix& a, const IndexSet& alpha) {
  detail::check_universe(a, alpha);
  if (alpha.empty()) {
    throw Error(ErrorCode::InvalidIndexSet, "principal submatrix of the empty set");
  }
  const auto idx = alpha.members();
  const std::size_t k = idx.size();
  std::vector<Rational> e;
  e.reserve(k * k);
  for (std::size_t i : idx) {
    for (std::size_t j : idx) e.push_back(a(i, j));
  }
  return SymMatrix(k, std::move(e));
}

/// The matrix with a'_{ij} = a_{pi(i) pi(j)}.
inline SymMatrix permute(const SymMatrix& a, const Permutation& pi) {
  if (pi.order() != a.order()) {
    throw Error(ErrorCode::OrderMismatch,
                "permutation of order " + std::to_string(pi.order()) +
                    " applied to a matrix of order " + std::to_string(a.order()));
  }
  const std::size_t m = a.order();
  std::vector<Rational> e(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) e[i * m + j] = a(pi(i), pi(j));
  }
  return SymMatrix(m, std::move(e));
}

/// pi(alpha) = {pi(i) : i in alpha}.
inline IndexSet image(const Permutation& pi, const IndexSet& alpha) {
  IndexSet out(alpha.universe());
  for (std::size_t i : alpha.members()) out.insert(pi(i));
  return out;
}

/// Block placement of A on alpha x alpha and B on beta x beta, zeros across.
/// alpha and beta must partition {0..|alpha|+|beta|-1}; the k-th smallest
/// element of alpha receives row k of A (likewise for beta and B).
inline SymMatrix direct_sum(const SymMatrix& a, const SymMatrix& b,
                            const IndexSet& alpha, const IndexSet& beta) {
  const std::size_t m = a.order() + b.order();
  if (alpha.universe() != m || beta.universe() != m) {
    throw Error(ErrorCode::InvalidPartition,
                "placement sets must live in {1.." + std::to_string(m) + "}");
  }
  if (!(alpha & beta).empty() || !(alpha | beta).complement().empty() ||
      alpha.size() != a.order() || beta.size() != b.order()) {
    throw Error(ErrorCode::InvalidPartition,
                alpha.to_string() + " / " + beta.to_string() +
                    " is not a partition matching the block orders");
  }
  std::vector<Rational> e(m * m);
  const auto ia = alpha.members();
  const auto ib = beta.members();
  for (std::size_t r = 0; r < ia.size(); ++r) {
    for (std::size_t c = 0; c < ia.size(); ++c) e[ia[r] * m + ia[c]] = a(r, c);
  }
  for (std::size_t r = 0; r < ib.size(); ++r) {
    for (std::size_t c = 0; c < ib.size(); ++c) e[ib[r] * m + ib[c]] = b(r, c);
  }
  return SymMatrix(m, std::move(e));
}

/// direct_sum with A in the leading block and B trailing.
inline SymMatrix direct_sum(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t m = a.order() + b.order();
  IndexSet alpha(m);
  IndexSet beta(m);
  for (std::size_t i = 0; i < a.order(); ++i) alpha.insert(i);
  for (std::size_t i = a.order(); i < m; ++i) beta.insert(i);
  return direct_sum(a, b, alpha, beta);
}

/// Zero-pad A to order m by appending indices at the end.
inline SymMatrix pad_to(const SymMatrix& a, std::size_t m) {
  if (m < a.order()) throw Error(ErrorCode::OrderMismatch, "cannot pad to a smaller order");
  if (m == a.order()) return a;
  return direct_sum(a, SymMatrix::zero(m - a.order()));
}

}  // namespace gdecomp
