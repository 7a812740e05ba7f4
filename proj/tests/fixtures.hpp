#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gdecomp/gdecomp.hpp"

namespace fx {

using gdecomp::Matrix;
using gdecomp::Rational;
using gdecomp::SymMatrix;

inline Rational R(const std::string& s) { return gdecomp::parse_rational(s); }

inline std::vector<std::vector<Rational>> rows_of(
    std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> out;
  for (auto r : rows) {
    std::vector<Rational> row;
    for (const char* s : r) row.push_back(R(s));
    out.push_back(std::move(row));
  }
  return out;
}

inline SymMatrix sym(std::initializer_list<std::initializer_list<const char*>> rows) {
  return SymMatrix::from_rows(rows_of(rows));
}

inline Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  return Matrix::from_rows(rows_of(rows));
}

inline SymMatrix M3() { return sym({{"0", "1/2", "1/2"}, {"1/2", "0", "0"}, {"1/2", "0", "1"}}); }

/// Cycle matrix: 1/2 between consecutive indices (cyclically), zero diagonal.
inline SymMatrix N(std::size_t m) {
  std::vector<Rational> e(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    e[i * m + j] = e[j * m + i] = Rational(1, 2);
  }
  return SymMatrix(m, std::move(e));
}

inline SymMatrix A6() {
  return sym({{"0", "1/2", "0", "0", "0", "0"},
              {"1/2", "0", "1/2", "0", "0", "0"},
              {"0", "1/2", "0", "1/2", "0", "0"},
              {"0", "0", "1/2", "1", "0", "0"},
              {"0", "0", "0", "0", "0", "0"},
              {"0", "0", "0", "0", "0", "1"}});
}

inline SymMatrix half_pair() { return sym({{"0", "1/2"}, {"1/2", "0"}}); }
inline SymMatrix ones2() { return sym({{"1", "1"}, {"1", "1"}}); }

inline gdecomp::IndexSet set(std::size_t m, std::initializer_list<std::size_t> one_based) {
  gdecomp::IndexSet s(m);
  for (auto i : one_based) s.insert(i - 1);
  return s;
}

inline void expect_code(gdecomp::ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << gdecomp::to_string(code);
  } catch (const gdecomp::Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

/// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  /// p/q with 0 <= p <= q, q in [1, max_den].
  Rational unit_rational(long max_den) {
    const long q = std::uniform_int_distribution<long>(1, max_den)(rng_);
    const long p = std::uniform_int_distribution<long>(0, q)(rng_);
    return Rational(p, q);
  }

  SymMatrix symmetric(std::size_t m, long max_den, double zero_prob = 0.3) {
    std::vector<Rational> e(m * m);
    std::bernoulli_distribution zero(zero_prob);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        const Rational v = zero(rng_) ? Rational(0) : unit_rational(max_den);
        e[i * m + j] = e[j * m + i] = v;
      }
    }
    return SymMatrix(m, std::move(e));
  }

  SymMatrix grid(std::size_t m) {
    std::vector<Rational> e(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      e[i * m + i] = Rational(static_cast<long>(index(2)));
      for (std::size_t j = i + 1; j < m; ++j) {
        e[i * m + j] = e[j * m + i] = Rational(static_cast<long>(index(3)), 2);
      }
    }
    return SymMatrix(m, std::move(e));
  }

  /// Scaled so the tightest subset becomes saturated: a member of U_m.
  SymMatrix member(std::size_t m, long max_den) {
    for (;;) {
      const SymMatrix a = symmetric(m, max_den);
      std::optional<Rational> factor;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        const auto alpha = gdecomp::IndexSet::from_mask(m, mask);
        const Rational ps = gdecomp::principal_sum(a, alpha);
        if (ps == 0) continue;
        const Rational f = Rational(static_cast<long>(alpha.size())) / ps;
        if (!factor || f < *factor) factor = f;
      }
      if (!factor) continue;
      std::vector<Rational> e(a.entries());
      for (auto& v : e) v *= *factor;
      return SymMatrix(m, std::move(e));
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fx
