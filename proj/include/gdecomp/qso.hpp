#pragma once

// Quadratic stochastic operators on the simplex and majorization.
//
// V x = ((A^(1) x, x), ..., (A^(m) x, x)) for symmetric layers A^(k).
// Sampling uses the lattice {0, 1/Q, ..., 1} so every test stays exact.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdecomp/error.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/membership.hpp"
#include "gdecomp/rational.hpp"

namespace gdecomp {

using RationalVector = std::vector<Rational>;

/// Point of the simplex: nonnegative coordinates summing to 1.
class SimplexVector {
 public:
  SimplexVector() = default;
  explicit SimplexVector(RationalVector x) : x_(std::move(x)) {
    Rational s;
    for (const auto& v : x_) {
      if (v < 0) throw Error(ErrorCode::NegativeEntry, "negative simplex coordinate");
      s += v;
    }
    if (s != 1) throw Error(ErrorCode::ParseError, "simplex coordinates sum to " + to_string(s));
  }

  std::size_t size() const noexcept { return x_.size(); }
  const Rational& operator[](std::size_t i) const { return x_.at(i); }
  const RationalVector& coords() const noexcept { return x_; }

  friend bool operator==(const SimplexVector&, const SimplexVector&) = default;

 private:
  RationalVector x_;
};

/// Cubic array A_{ij,k} stored as m layers; each layer must be symmetric.
class QuadraticOperator {
 public:
  QuadraticOperator() = default;
  explicit QuadraticOperator(std::vector<Matrix> layers) : layers_(std::move(layers)) {
    const std::size_t m = layers_.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Matrix& l = layers_[k];
      if (l.rows() != m || l.cols() != m) {
        throw Error(ErrorCode::OrderMismatch, "layer " + std::to_string(k + 1) + " is not " +
                                                  std::to_string(m) + "x" + std::to_string(m));
      }
      if (!(l == l.transpose())) {
        throw Error(ErrorCode::AsymmetricInput,
                    "layer " + std::to_string(k + 1) + " is not symmetric");
      }
    }
  }

  std::size_t order() const noexcept { return layers_.size(); }
  const Matrix& layer(std::size_t k) const { return layers_.at(k); }
  const std::vector<Matrix>& layers() const noexcept { return layers_; }

 private:
  std::vector<Matrix> layers_;
};

inline SimplexVector sort_desc(const SimplexVector& x) {
  RationalVector v = x.coords();
  std::sort(v.begin(), v.end(), std::greater<>());
  return SimplexVector(std::move(v));
}

/// y is majorized by x: equal totals and every k-largest partial sum of y
/// is at most that of x.
inline bool majorizes(const RationalVector& y, const RationalVector& x) {
  if (y.size() != x.size()) {
    throw Error(ErrorCode::LengthMismatch, "lengths " + std::to_string(y.size()) + " and " +
                                               std::to_string(x.size()));
  }
  RationalVector ys = y;
  RationalVector xs = x;
  std::sort(ys.begin(), ys.end(), std::greater<>());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  Rational sy;
  Rational sx;
  for (std::size_t k = 0; k < ys.size(); ++k) {
    sy += ys[k];
    sx += xs[k];
    if (k + 1 < ys.size() && sy > sx) return false;
  }
  return sy == sx;
}

/// (A x, x) for a square matrix A.
inline Rational quadratic_form(const Matrix& a, const RationalVector& x) {
  Rational s;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    Rational row;
    for (std::size_t j = 0; j < a.cols(); ++j) row += a(i, j) * x[j];
    s += row * x[i];
  }
  return s;
}

inline Rational quadratic_form(const SymMatrix& a, const RationalVector& x) {
  return quadratic_form(a.to_matrix(), x);
}

inline RationalVector qo_apply(const QuadraticOperator& v, const SimplexVector& x) {
  if (x.size() != v.order()) {
    throw Error(ErrorCode::OrderMismatch, "operator of order " + std::to_string(v.order()) +
                                              " applied to a vector of length " +
                                              std::to_string(x.size()));
  }
  RationalVector out;
  out.reserve(v.order());
  for (const auto& l : v.layers()) out.push_back(quadratic_form(l, x.coords()));
  return out;
}

/// All coefficients nonnegative and sum_k A_{ij,k} = 1 for every (i, j).
inline bool qo_is_stochastic(const QuadraticOperator& v) {
  const std::size_t m = v.order();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Rational s;
      for (const auto& l : v.layers()) {
        if (l(i, j) < 0) return false;
        s += l(i, j);
      }
      if (s != 1) return false;
    }
  }
  return true;
}

/// Necessary condition for Vx to be majorized by x on the whole simplex:
/// every layer lies in U^m. Not sufficient.
inline bool qo_gds_necessary(const QuadraticOperator& v, std::size_t cap = kDefaultExhaustiveCap) {
  if (!qo_is_stochastic(v)) throw Error(ErrorCode::NotStochastic, "operator is not stochastic");
  for (const auto& l : v.layers()) {
    if (!check_Um_upper(SymMatrix(l), MembershipMethod::Auto, cap).member) return false;
  }
  return true;
}

/// splitmix64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on {0, ..., bound} (rejection sampling, no modulo bias).
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t range = bound + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % range;
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kSimplexLattice = 1000000;
inline constexpr std::size_t kDefaultTrials = 1000;

/// m-1 lattice cut points in [0, 1], sorted; the gaps are the coordinates.
inline SimplexVector sample_simplex(std::size_t m, SplitMix64& rng) {
  if (m == 0) throw Error(ErrorCode::OrderMismatch, "empty simplex");
  std::vector<std::uint64_t> cuts;
  cuts.reserve(m + 1);
  cuts.push_back(0);
  for (std::size_t k = 0; k + 1 < m; ++k) cuts.push_back(rng.uniform(kSimplexLattice));
  cuts.push_back(kSimplexLattice);
  std::sort(cuts.begin() + 1, cuts.end() - 1);
  RationalVector x;
  x.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    x.emplace_back(static_cast<long long>(cuts[k + 1] - cuts[k]),
                   static_cast<long long>(kSimplexLattice));
  }
  return SimplexVector(std::move(x));
}

/// Falsifier: the first sampled x with Vx not majorized by x, if any. No
/// counterexample in `trials` draws says nothing about the full simplex.
inline std::optional<SimplexVector> qo_gds_sample(const QuadraticOperator& v, std::size_t trials,
                                                  std::uint64_t seed) {
  if (!qo_is_stochastic(v)) throw Error(ErrorCode::NotStochastic, "operator is not stochastic");
  SplitMix64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    SimplexVector x = sample_simplex(v.order(), rng);
    if (!majorizes(qo_apply(v, x), x.coords())) return x;
  }
  return std::nullopt;
}

enum class BoundsOutcome { ConfirmedOnSamples, Counterexample };

enum class BoundsBasis {
  Member,          // A in U^m: the bounds hold everywhere; samples are a sanity check
  ViolatingSubset, // x uniform on a violating alpha breaks the upper bound
  DeficientTotal,  // U_m member with total < m: x uniform on I_m breaks the lower bound
  Sampled,         // a sampled point broke a bound (would contradict the theorem)
};

struct BoundsCertificate {
  BoundsOutcome outcome = BoundsOutcome::ConfirmedOnSamples;
  BoundsBasis basis = BoundsBasis::Member;
  std::optional<SimplexVector> x;
  std::optional<IndexSet> subset;
  /// (A x, x) at the counterexample.
  std::optional<Rational> value;
  std::size_t trials = 0;
};

namespace detail {

inline bool within_bounds(const SymMatrix& a, const SimplexVector& x, Rational* value) {
  const auto [lo, hi] = std::minmax_element(x.coords().begin(), x.coords().end());
  *value = quadratic_form(a, x.coords());
  return *lo <= *value && *value <= *hi;
}

inline SimplexVector uniform_on(const IndexSet& alpha) {
  RationalVector x(alpha.universe());
  const Rational w(1, static_cast<long>(alpha.size()));
  for (std::size_t i : alpha.members()) x[i] = w;
  return SimplexVector(std::move(x));
}

}  // namespace detail

/// Tests min_i x_i <= (A x, x) <= max_i x_i, which holds on the whole
/// simplex iff A in U^m.
inline BoundsCertificate qf_bounds_certificate(const SymMatrix& a,
                                               std::size_t trials = kDefaultTrials,
                                               std::uint64_t seed = 0,
                                               std::size_t cap = kDefaultExhaustiveCap) {
  BoundsCertificate cert;
  const MembershipVerdict v = check_Um_upper(a, MembershipMethod::Auto, cap);
  auto counterexample = [&](BoundsBasis basis, SimplexVector x) {
    cert.outcome = BoundsOutcome::Counterexample;
    cert.basis = basis;
    cert.value = quadratic_form(a, x.coords());
    cert.x = std::move(x);
    return cert;
  };
  if (v.certificate) {
    cert.subset = v.certificate;
    return counterexample(BoundsBasis::ViolatingSubset, detail::uniform_on(*v.certificate));
  }
  if (!v.member) {
    return counterexample(BoundsBasis::DeficientTotal, detail::uniform_on(IndexSet::full(a.order())));
  }
  SplitMix64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    SimplexVector x = sample_simplex(a.order(), rng);
    Rational value;
    if (!detail::within_bounds(a, x, &value)) return counterexample(BoundsBasis::Sampled, x);
  }
  cert.trials = trials;
  return cert;
}

}  // namespace gdecomp
