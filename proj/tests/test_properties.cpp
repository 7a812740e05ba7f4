// Randomized invariants over hand-rolled generators (fixed seeds).

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gdecomp;

namespace {

Permutation random_permutation(fx::Gen& gen, std::size_t m) {
  std::vector<std::size_t> img(m);
  for (std::size_t i = 0; i < m; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), gen.engine());
  return Permutation(img);
}

IndexSet random_set(fx::Gen& gen, std::size_t m) {
  IndexSet s(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (gen.index(2) == 1) s.insert(i);
  }
  return s;
}

}  // namespace

TEST(Property, PrincipalSumsAreMonotoneAndTotal) {
  fx::Gen gen(1);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + gen.index(6);
    const SymMatrix a = gen.symmetric(m, 9);
    const IndexSet small = random_set(gen, m);
    const IndexSet big = small | random_set(gen, m);
    ASSERT_LE(principal_sum(a, small), principal_sum(a, big));
    ASSERT_EQ(principal_sum(a, IndexSet::full(m)), a.total_sum());
    ASSERT_EQ(principal_sum(a, small), oracle::psum(a, small.members()));
  }
}

TEST(Property, PermutationMovesPrincipalSums) {
  fx::Gen gen(2);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + gen.index(6);
    const SymMatrix a = gen.symmetric(m, 9);
    const Permutation p = random_permutation(gen, m);
    const IndexSet alpha = random_set(gen, m);
    ASSERT_EQ(principal_sum(permute(a, p), alpha), principal_sum(a, image(p, alpha)));
    ASSERT_EQ(permute(permute(a, p), p.inverse()), a);
  }
}

TEST(Property, DirectSumBlocksRecover) {
  fx::Gen gen(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t p = 1 + gen.index(3);
    const std::size_t q = 1 + gen.index(3);
    const SymMatrix a = gen.symmetric(p, 7);
    const SymMatrix b = gen.symmetric(q, 7);
    const Permutation pi = random_permutation(gen, p + q);
    IndexSet alpha(p + q);
    for (std::size_t i = 0; i < p; ++i) alpha.insert(pi(i));
    const SymMatrix c = direct_sum(a, b, alpha, alpha.complement());
    ASSERT_EQ(principal_submatrix(c, alpha), a);
    ASSERT_EQ(principal_submatrix(c, alpha.complement()), b);
  }
}

TEST(Property, MembershipRoutesAgreeOnRationalInput) {
  fx::Gen gen(4);
  for (int t = 0; t < 400; ++t) {
    const std::size_t m = 1 + gen.index(6);
    const SymMatrix a = gen.symmetric(m, 4, 0.4);
    const bool truth = oracle::member_Um(a);
    const auto bf = check_Um_bruteforce(a);
    const auto mc = check_Um_mincut(a);
    ASSERT_EQ(bf.member, truth);
    ASSERT_EQ(mc.member, truth);
    ASSERT_EQ(*bf.slack, oracle::slack(a));
    for (const auto* v : {&bf, &mc}) {
      ASSERT_EQ(v->member, !v->certificate.has_value());
      if (v->certificate) {
        ASSERT_GT(principal_sum(a, *v->certificate), Rational(static_cast<long>(v->certificate->size())));
      }
    }
    if (check_Um_upper(a).member) {
      ASSERT_TRUE(bf.member);
    }
  }
}

TEST(Property, SplitHalvesAverageBack) {
  fx::Gen gen(5);
  int splits = 0;
  for (int t = 0; t < 200; ++t) {
    const SymMatrix a = gen.member(1 + gen.index(4), 6);
    if (is_extreme_criterion(a).extreme) continue;
    const SplitResult s = split_nonextreme(a);
    ++splits;
    ASSERT_TRUE(oracle::member_Um(s.plus));
    ASSERT_TRUE(oracle::member_Um(s.minus));
    ASSERT_NE(s.plus, s.minus);
    ASSERT_EQ(combine(Rational(1, 2), s.plus, Rational(1, 2), s.minus), a);
    // Saturated sets of A stay saturated on both sides.
    for (const auto& alpha : oracle::saturated(a)) {
      ASSERT_EQ(oracle::psum(s.plus, alpha), oracle::psum(a, alpha));
    }
  }
  EXPECT_GT(splits, 100);
}

TEST(Property, ExtensionLandsInUpperSet) {
  fx::Gen gen(6);
  for (int t = 0; t < 80; ++t) {
    const std::size_t m = 1 + gen.index(3);
    const SymMatrix a = gen.member(m, 6);
    const SymMatrix e = extend_to_saturated(a);
    IndexSet lead(m + 1);
    for (std::size_t i = 0; i < m; ++i) lead.insert(i);
    ASSERT_EQ(principal_submatrix(e, lead), a);
    ASSERT_TRUE(oracle::member_UM(e)) << serialize_matrix(a, Format::Plain);
  }
}

TEST(Property, UpperMembersDecomposeStochastically) {
  fx::Gen gen(7);
  for (int t = 0; t < 80; ++t) {
    const SymMatrix a = extend_to_saturated(gen.member(1 + gen.index(3), 6));
    const DecompResult flow = g_decompose(a, DecompMode::Stochastic);
    ASSERT_TRUE(flow.solved());
    ASSERT_TRUE(oracle::valid_decomposition(a, *flow.X, true));
    const DecompResult lift = g_decompose_via_vertices(a, DecompMode::Stochastic);
    ASSERT_TRUE(oracle::valid_decomposition(a, *lift.X, true));
    ASSERT_EQ(qf_bounds_certificate(a, 20, static_cast<std::uint64_t>(t)).outcome,
              BoundsOutcome::ConfirmedOnSamples);
  }
}

TEST(Property, OutsideUpperSetHasExplicitCounterexample) {
  fx::Gen gen(8);
  for (int t = 0; t < 200; ++t) {
    const SymMatrix a = gen.symmetric(1 + gen.index(4), 3, 0.3);
    const auto c = qf_bounds_certificate(a, 5, 0);
    ASSERT_EQ(c.outcome == BoundsOutcome::ConfirmedOnSamples, oracle::member_UM(a));
    if (c.outcome == BoundsOutcome::Counterexample) {
      const auto& x = c.x->coords();
      const Rational lo = *std::min_element(x.begin(), x.end());
      const Rational hi = *std::max_element(x.begin(), x.end());
      ASSERT_EQ(*c.value, quadratic_form(a, x));
      ASSERT_TRUE(*c.value < lo || *c.value > hi);
    }
  }
}

TEST(Property, GdsSampleIsDeterministic) {
  const QuadraticOperator v({fx::mat({{"1", "1"}, {"1", "0"}}), fx::mat({{"0", "0"}, {"0", "1"}})});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ASSERT_EQ(qo_gds_sample(v, 50, seed), qo_gds_sample(v, 50, seed));
  }
}
