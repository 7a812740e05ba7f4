#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gdecomp;
using fx::expect_code;
using fx::mat;
using fx::sym;

TEST(FlowNetwork, Layout) {
  const FlowNetwork m3 = build_flow_network(fx::M3());
  EXPECT_EQ(m3.pairs(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}}));
  EXPECT_EQ(m3.sink_capacities(), (std::vector<Rational>{1, 1, 0}));
  EXPECT_EQ(m3.source_capacity(), 2);

  const FlowNetwork z = build_flow_network(SymMatrix::zero(3));
  EXPECT_EQ(z.edge_count(), 0u);
  EXPECT_EQ(z.sink_capacities(), (std::vector<Rational>{1, 1, 1}));

  const FlowNetwork o = build_flow_network(fx::ones2());
  EXPECT_EQ(o.edge_count(), 1u);
  EXPECT_EQ(o.arcs()[o.source_arc(0)].capacity, 2);
  EXPECT_EQ(o.sink_capacities(), (std::vector<Rational>{0, 0}));

  expect_code(ErrorCode::DiagonalOverflow, [] { build_flow_network(sym({{"2"}})); });
}

TEST(MaxFlow, Examples) {
  const FlowNetwork o = build_flow_network(fx::ones2());
  const FlowResult fo = max_flow(o);
  EXPECT_EQ(fo.value, 0);
  EXPECT_EQ(fo.cut_vertices(o), IndexSet::full(2));

  const FlowNetwork m3 = build_flow_network(fx::M3());
  EXPECT_EQ(max_flow(m3).value, 2);

  EXPECT_EQ(max_flow(build_flow_network(SymMatrix::zero(2))).value, 0);
}

TEST(MaxFlow, CutIdentityOnGrid) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& a : oracle::grid(m)) {
      const FlowNetwork net = build_flow_network(a);
      const FlowResult f = max_flow(net);
      const bool full = f.value == net.source_capacity();
      ASSERT_EQ(full, oracle::member_Um(a));
      if (!full) {
        const IndexSet alpha = f.cut_vertices(net);
        ASSERT_GT(principal_sum(a, alpha), Rational(static_cast<long>(alpha.size())));
      }
    }
  }
}

TEST(GDecompose, Examples) {
  const DecompResult m3 = g_decompose(fx::M3(), DecompMode::Stochastic);
  ASSERT_TRUE(m3.solved());
  EXPECT_TRUE(oracle::valid_decomposition(fx::M3(), *m3.X, true));

  const DecompResult hp = g_decompose(fx::half_pair(), DecompMode::Substochastic);
  ASSERT_TRUE(hp.solved());
  EXPECT_TRUE(oracle::valid_decomposition(fx::half_pair(), *hp.X, false));

  const DecompResult hs = g_decompose(fx::half_pair(), DecompMode::Stochastic);
  EXPECT_EQ(hs.status, DecompStatus::NotMember);
  EXPECT_EQ(hs.reason, MembershipReason::TotalSumMismatch);
  EXPECT_FALSE(hs.certificate);

  const DecompResult o = g_decompose(fx::ones2(), DecompMode::Substochastic);
  EXPECT_EQ(o.status, DecompStatus::NotMember);
  EXPECT_EQ(*o.certificate, IndexSet::full(2));

  const DecompResult d = g_decompose(sym({{"3/2", "0"}, {"0", "0"}}), DecompMode::Substochastic);
  EXPECT_EQ(*d.certificate, fx::set(2, {1}));
}

TEST(GDecompose, MainTheoremOnGrid) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& a : oracle::grid(m)) {
      for (const auto mode : {DecompMode::Stochastic, DecompMode::Substochastic}) {
        const bool stochastic = mode == DecompMode::Stochastic;
        const DecompResult r = g_decompose(a, mode);
        ASSERT_EQ(r.solved(), stochastic ? oracle::member_UM(a) : oracle::member_Um(a));
        if (r.solved()) {
          ASSERT_TRUE(oracle::valid_decomposition(a, *r.X, stochastic));
        } else if (r.certificate) {
          ASSERT_GT(principal_sum(a, *r.certificate), Rational(static_cast<long>(r.certificate->size())));
        } else {
          ASSERT_TRUE(stochastic);
          ASSERT_NE(a.total_sum(), Rational(static_cast<long>(m)));
        }
      }
    }
  }
}

TEST(GDecompose, RandomRationalMembers) {
  fx::Gen gen(3);
  for (int t = 0; t < 200; ++t) {
    const SymMatrix a = gen.member(1 + gen.index(6), 12);
    const DecompResult r = g_decompose(a, DecompMode::Substochastic);
    ASSERT_TRUE(r.solved());
    ASSERT_TRUE(oracle::valid_decomposition(a, *r.X, false));
  }
}

TEST(Inductive, Examples) {
  const DecompResult one = g_decompose_extreme_inductive(sym({{"1"}}));
  EXPECT_EQ(*one.X, mat({{"1"}}));

  const DecompResult id = g_decompose_extreme_inductive(SymMatrix::identity(3));
  EXPECT_EQ(*id.X, SymMatrix::identity(3).to_matrix());

  const DecompResult m3 = g_decompose_extreme_inductive(fx::M3());
  EXPECT_EQ(*m3.X, mat({{"0", "0", "1"}, {"1", "0", "0"}, {"0", "0", "1"}}));
  EXPECT_TRUE(oracle::valid_decomposition(fx::M3(), *m3.X, true));

  expect_code(ErrorCode::NotExtreme, [] { g_decompose_extreme_inductive(fx::N(3)); });
  expect_code(ErrorCode::NotMember, [] { g_decompose_extreme_inductive(fx::half_pair()); });
}

TEST(Inductive, EveryUpperVertexUpToOrderFour) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const auto& v : enumerate_extreme(m, Ambient::UM)) {
      const DecompResult r = g_decompose_extreme_inductive(v);
      ASSERT_TRUE(oracle::valid_decomposition(v, *r.X, true)) << serialize_matrix(v, Format::Plain);
    }
  }
}

TEST(Inductive, SubstochasticPathPadsZeroRows) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const auto& v : enumerate_extreme(m, Ambient::Um)) {
      const DecompResult r = g_decompose_extreme_substochastic(v);
      ASSERT_TRUE(oracle::valid_decomposition(v, *r.X, false));
      for (std::size_t i = 0; i < m; ++i) {
        if (!v.row_is_zero(i)) continue;
        for (std::size_t j = 0; j < m; ++j) ASSERT_EQ((*r.X)(i, j), 0);
      }
    }
  }
}

TEST(Lift, VertexSolutionsCombine) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& a : oracle::grid(m)) {
      if (oracle::member_UM(a)) {
        const DecompResult r = g_decompose_via_vertices(a, DecompMode::Stochastic);
        ASSERT_TRUE(oracle::valid_decomposition(a, *r.X, true));
      }
      if (oracle::member_Um(a)) {
        const DecompResult r = g_decompose_via_vertices(a, DecompMode::Substochastic);
        ASSERT_TRUE(oracle::valid_decomposition(a, *r.X, false));
      }
    }
  }
  EXPECT_EQ(g_decompose_via_vertices(fx::ones2(), DecompMode::Substochastic).status,
            DecompStatus::NotMember);
}

TEST(Verify, Examples) {
  EXPECT_TRUE(verify_decomposition(fx::M3(), mat({{"0", "0", "1"}, {"1", "0", "0"}, {"0", "0", "1"}}),
                                   DecompMode::Stochastic));
  EXPECT_FALSE(verify_decomposition(fx::M3(), fx::M3().to_matrix(), DecompMode::Stochastic));
  EXPECT_TRUE(verify_decomposition(SymMatrix::zero(2), Matrix(2, 2), DecompMode::Substochastic));
  EXPECT_FALSE(verify_decomposition(fx::half_pair(), mat({{"0", "2"}, {"-1", "0"}}),
                                    DecompMode::Substochastic));
  expect_code(ErrorCode::OrderMismatch,
              [] { verify_decomposition(fx::M3(), Matrix(2, 2), DecompMode::Stochastic); });
}
