#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gdecomp;
using fx::expect_code;
using fx::sym;

namespace {

std::set<std::string> keys(const std::vector<SymMatrix>& v) {
  std::set<std::string> out;
  for (const auto& a : v) out.insert(a.key());
  return out;
}

void expect_valid_combination(const SymMatrix& a, const ConvexCombination& c, Ambient ambient) {
  EXPECT_EQ(c.weight_sum(), 1);
  EXPECT_EQ(c.reconstruct(), a);
  std::set<std::string> seen;
  for (const auto& t : c.terms) {
    EXPECT_GT(t.weight, 0);
    EXPECT_LE(t.weight, 1);
    EXPECT_TRUE(is_extreme_criterion(t.vertex, ambient).extreme);
    EXPECT_TRUE(oracle::is_vertex(t.vertex));
    EXPECT_TRUE(ambient == Ambient::Um ? oracle::member_Um(t.vertex) : oracle::member_UM(t.vertex));
    EXPECT_TRUE(seen.insert(t.vertex.key()).second) << "vertex listed twice";
  }
}

}  // namespace

TEST(Criterion, ExtremeExamples) {
  const auto m3 = is_extreme_criterion(fx::M3());
  EXPECT_TRUE(m3.extreme);
  EXPECT_EQ(m3.fractional_entries, (std::vector<Position>{{0, 1}, {0, 2}}));
  EXPECT_EQ(*m3.neighborhoods[0], IndexSet::full(3));
  EXPECT_EQ(*m3.neighborhoods[1], fx::set(3, {1, 3}));

  const auto id = is_extreme_criterion(SymMatrix::identity(3));
  EXPECT_TRUE(id.extreme);
  EXPECT_TRUE(id.fractional_entries.empty());
  EXPECT_FALSE(id.failure);
}

TEST(Criterion, MissingNeighborhood) {
  const auto r = is_extreme_criterion(fx::half_pair());
  EXPECT_FALSE(r.extreme);
  ASSERT_TRUE(r.failure);
  const auto* miss = std::get_if<MissingNeighborhood>(&*r.failure);
  ASSERT_NE(miss, nullptr);
  EXPECT_EQ(miss->at, (Position{0, 1}));
  EXPECT_FALSE(r.neighborhoods[0]);
}

TEST(Criterion, DuplicateNeighborhoodOnCycle) {
  const auto r = is_extreme_criterion(fx::N(6), Ambient::UM);
  EXPECT_FALSE(r.extreme);
  ASSERT_TRUE(r.failure);
  const auto* dup = std::get_if<DuplicateNeighborhood>(&*r.failure);
  ASSERT_NE(dup, nullptr);
  EXPECT_EQ(r.fractional_entries.size(), 6u);
  for (const auto& n : r.neighborhoods) EXPECT_EQ(*n, IndexSet::full(6));
  EXPECT_NE(dup->first, dup->second);
}

TEST(Criterion, DiagonalAndOffDiagonalCanCollide) {
  // a_11 = 1/2 and a_12 = 1/4 share the neighborhood {1,2}.
  const SymMatrix a = sym({{"1/2", "1/4"}, {"1/4", "1"}});
  const auto r = is_extreme_criterion(a);
  ASSERT_TRUE(r.failure);
  EXPECT_TRUE(std::holds_alternative<DuplicateNeighborhood>(*r.failure));
  EXPECT_FALSE(is_extreme_nullspace(a));
}

TEST(Criterion, AmbientChecks) {
  expect_code(ErrorCode::NotMember, [] { is_extreme_criterion(fx::ones2()); });
  expect_code(ErrorCode::NotMember, [] { is_extreme_criterion(fx::half_pair(), Ambient::UM); });
  expect_code(ErrorCode::CapExceeded, [] { is_extreme_criterion(SymMatrix::zero(6), Ambient::Um, 5); });
  EXPECT_TRUE(certify_extreme(fx::M3()).has_value());
  EXPECT_FALSE(certify_extreme(fx::half_pair()).has_value());
}

TEST(Nullspace, Examples) {
  EXPECT_TRUE(is_extreme_nullspace(fx::M3()));
  EXPECT_FALSE(is_extreme_nullspace(fx::N(6)));
  EXPECT_TRUE(is_extreme_nullspace(SymMatrix::zero(3)));
  expect_code(ErrorCode::NotMember, [] { is_extreme_nullspace(fx::ones2()); });
}

TEST(Nullspace, AlternatingCycleDirectionKeepsTightConstraints) {
  // +1, -1 around the even cycle keeps every zero entry and the full sum.
  const SymMatrix n6 = fx::N(6);
  std::vector<Rational> up(n6.entries());
  std::vector<Rational> down(n6.entries());
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t j = (i + 1) % 6;
    const Rational d = i % 2 == 0 ? Rational(1, 4) : Rational(-1, 4);
    up[i * 6 + j] += d;
    up[j * 6 + i] += d;
    down[i * 6 + j] -= d;
    down[j * 6 + i] -= d;
  }
  EXPECT_TRUE(oracle::member_UM(SymMatrix(6, up)));
  EXPECT_TRUE(oracle::member_UM(SymMatrix(6, down)));
}

TEST(Split, HalfPair) {
  const SplitResult s = split_nonextreme(fx::half_pair());
  EXPECT_EQ(s.plus, sym({{"0", "3/4"}, {"3/4", "0"}}));
  EXPECT_EQ(s.minus, sym({{"0", "1/4"}, {"1/4", "0"}}));
  EXPECT_EQ(s.epsilon, Rational(1, 4));
}

TEST(Split, CycleMovesTwoEntriesInOppositeDirections) {
  const SymMatrix n6 = fx::N(6);
  const SplitResult s = split_nonextreme(n6);
  EXPECT_TRUE(oracle::member_UM(s.plus));
  EXPECT_TRUE(oracle::member_UM(s.minus));
  EXPECT_EQ(combine(Rational(1, 2), s.plus, Rational(1, 2), s.minus), n6);
  std::size_t changed = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i; j < 6; ++j) {
      if (s.plus(i, j) != n6(i, j)) ++changed;
    }
  }
  EXPECT_EQ(changed, 2u);
  EXPECT_GT(s.epsilon, 0);
}

TEST(Split, RefusesExtremeAndNonMembers) {
  expect_code(ErrorCode::IsExtreme, [] { split_nonextreme(fx::M3()); });
  expect_code(ErrorCode::NotMember, [] { split_nonextreme(fx::ones2()); });
}

TEST(Split, MixedDiagonalPairUsesBalancedWeights) {
  const SymMatrix a = sym({{"1/2", "1/4"}, {"1/4", "1"}});
  const SplitResult s = split_nonextreme(a);
  EXPECT_TRUE(oracle::member_Um(s.plus));
  EXPECT_TRUE(oracle::member_Um(s.minus));
  EXPECT_NE(s.plus, s.minus);
  EXPECT_EQ(combine(Rational(1, 2), s.plus, Rational(1, 2), s.minus), a);
  // Saturated {1,2} stays saturated on both sides.
  EXPECT_EQ(s.plus.total_sum(), 2);
  EXPECT_EQ(s.minus.total_sum(), 2);
}

TEST(Enumerate, SmallOrders) {
  EXPECT_EQ(enumerate_extreme(1, Ambient::Um), (std::vector<SymMatrix>{sym({{"0"}}), sym({{"1"}})}));
  EXPECT_EQ(enumerate_extreme(1, Ambient::UM), (std::vector<SymMatrix>{sym({{"1"}})}));
  EXPECT_EQ(enumerate_extreme(2, Ambient::UM),
            (std::vector<SymMatrix>{sym({{"0", "1/2"}, {"1/2", "1"}}), sym({{"0", "1"}, {"1", "0"}}),
                                    sym({{"1", "0"}, {"0", "1"}}), sym({{"1", "1/2"}, {"1/2", "0"}})}));
  const auto lower = enumerate_extreme(2, Ambient::Um);
  EXPECT_EQ(lower.size(), 7u);
  auto k = keys(lower);
  for (const auto& a : {SymMatrix::zero(2), sym({{"1", "0"}, {"0", "0"}}), sym({{"0", "0"}, {"0", "1"}})}) {
    EXPECT_TRUE(k.count(a.key()));
  }
  expect_code(ErrorCode::CapExceeded, [] { enumerate_extreme(5, Ambient::Um); });
}

TEST(Enumerate, ThreadedRunMatchesSerial) {
  EXPECT_EQ(enumerate_extreme(3, Ambient::Um, 3), enumerate_extreme(3, Ambient::Um, 1));
}

TEST(KreinMilman, Examples) {
  const auto id = krein_milman_decompose(SymMatrix::identity(3));
  ASSERT_EQ(id.terms.size(), 1u);
  EXPECT_EQ(id.terms[0].weight, 1);
  EXPECT_EQ(id.terms[0].vertex, SymMatrix::identity(3));

  const auto hp = krein_milman_decompose(fx::half_pair());
  ASSERT_EQ(hp.terms.size(), 2u);
  EXPECT_EQ(hp.terms[0].weight, Rational(1, 2));
  EXPECT_EQ(hp.terms[0].vertex, sym({{"0", "1"}, {"1", "0"}}));
  EXPECT_EQ(hp.terms[1].weight, Rational(1, 2));
  EXPECT_EQ(hp.terms[1].vertex, SymMatrix::zero(2));

  const SymMatrix n3 = fx::N(3);
  const auto c = krein_milman_decompose(n3, Ambient::UM);
  expect_valid_combination(n3, c, Ambient::UM);
  const auto vertices = keys(enumerate_extreme(3, Ambient::UM));
  for (const auto& t : c.terms) EXPECT_TRUE(vertices.count(t.vertex.key()));

  expect_code(ErrorCode::NotMember, [] { krein_milman_decompose(fx::half_pair(), Ambient::UM); });
}

TEST(KreinMilman, RandomMembers) {
  fx::Gen gen(21);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 1 + gen.index(4);
    const SymMatrix a = gen.member(m, 6);
    const auto c = krein_milman_decompose(a);
    expect_valid_combination(a, c, Ambient::Um);
    for (const auto& term : c.terms) EXPECT_TRUE(on_grid(term.vertex));
  }
}

TEST(Scan, SmallOrdersHaveNoCounterexamples) {
  const ScanReport two = conjecture_scan(2);
  EXPECT_EQ(two.grid_size, 12u);
  EXPECT_TRUE(two.counterexamples_lower.empty());
  EXPECT_TRUE(two.counterexamples_upper.empty());
  EXPECT_EQ(two.extreme_lower, 7u);
  EXPECT_EQ(two.extreme_upper, 4u);

  const ScanReport three = conjecture_scan(3);
  EXPECT_EQ(three.grid_size, 216u);
  EXPECT_TRUE(three.counterexamples_lower.empty());
  EXPECT_TRUE(three.counterexamples_upper.empty());
  EXPECT_EQ(three.extreme_lower, enumerate_extreme(3, Ambient::Um).size());
  expect_code(ErrorCode::CapExceeded, [] { conjecture_scan(5); });
}

TEST(Structure, OracleAgreementOnGrid) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const auto& a : oracle::grid(m)) {
      if (!oracle::member_Um(a)) continue;
      const bool crit = is_extreme_criterion(a).extreme;
      ASSERT_EQ(crit, is_extreme_nullspace(a)) << serialize_matrix(a, Format::Plain);
      ASSERT_EQ(crit, oracle::is_vertex(a)) << serialize_matrix(a, Format::Plain);
    }
  }
}

TEST(Structure, UpperVerticesAreSaturatedLowerVertices) {
  for (std::size_t m = 1; m <= 4; ++m) {
    std::vector<SymMatrix> expected;
    for (const auto& a : enumerate_extreme(m, Ambient::Um)) {
      if (a.total_sum() == Rational(static_cast<long>(m))) expected.push_back(a);
    }
    EXPECT_EQ(enumerate_extreme(m, Ambient::UM), expected);
  }
}

TEST(Structure, OnlyZeroVertexLiesOnHalfGrid) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const auto& a : enumerate_extreme(m, Ambient::Um)) {
      if (on_half_grid(a)) EXPECT_EQ(a, SymMatrix::zero(m));
    }
  }
}

TEST(Structure, VerticesAreSaturatedIffNoZeroRow) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const auto& a : enumerate_extreme(m, Ambient::Um)) {
      bool zero_row = false;
      for (std::size_t i = 0; i < m; ++i) zero_row = zero_row || a.row_is_zero(i);
      EXPECT_EQ(a.total_sum() == Rational(static_cast<long>(m)), !zero_row);
    }
  }
}

TEST(Structure, PermutationClosure) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto perms = all_permutations(m);
    for (const auto& a : enumerate_extreme(m, Ambient::Um)) {
      for (const auto& p : perms) ASSERT_TRUE(is_extreme_criterion(permute(a, p)).extreme);
    }
  }
}

TEST(Structure, DirectSumClosure) {
  for (std::size_t p = 1; p <= 2; ++p) {
    for (std::size_t q = 1; q <= 2; ++q) {
      const std::size_t m = p + q;
      for (const auto& a : enumerate_extreme(p, Ambient::Um)) {
        for (const auto& b : enumerate_extreme(q, Ambient::Um)) {
          for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
            const IndexSet alpha = IndexSet::from_mask(m, mask);
            if (alpha.size() != p) continue;
            const SymMatrix c = direct_sum(a, b, alpha, alpha.complement());
            ASSERT_TRUE(is_extreme_criterion(c).extreme);
            if (is_member(a, Ambient::UM) && is_member(b, Ambient::UM)) {
              ASSERT_TRUE(is_extreme_criterion(c, Ambient::UM).extreme);
            }
          }
        }
      }
    }
  }
}

TEST(Structure, CriterionExtremeImpliesGridOnRandomInput) {
  fx::Gen gen(5);
  int extreme = 0;
  for (int t = 0; t < 3000; ++t) {
    const std::size_t m = 1 + gen.index(4);
    // Small denominators make saturated faces, and hence vertices, likely.
    const SymMatrix a = gen.member(m, 2);
    if (!is_extreme_criterion(a).extreme) continue;
    ++extreme;
    ASSERT_TRUE(on_grid(a)) << serialize_matrix(a, Format::Plain);
  }
  EXPECT_GT(extreme, 0);
}
