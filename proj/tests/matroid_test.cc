// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <bit>
#include <numeric>
#include <random>

#include "ksec/errors.h"
#include "ksec/matroid_ops.h"
#include "ksec/matroids.h"
#include "test_util.h"

namespace ksec {
namespace {

using ::ksec::testing::GraphHasCycle;
using ::ksec::testing::Predicate;
using ::ksec::testing::SmallMatroidZoo;
using ::ksec::testing::TableRank;
using ::ksec::testing::TableSpan;

// Edge labels of K4 as produced by GraphicMatroid::Complete(4):
// 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
constexpr Element kE01 = 0, kE02 = 1, kE12 = 3, kE13 = 4;

GroundSet DistinctWeights(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> w(n);
  std::iota(w.begin(), w.end(), 1.0);
  std::shuffle(w.begin(), w.end(), rng);
  return GroundSet(w);
}

TEST(GroundSetTest, RejectsNonPositiveWeights) {
  EXPECT_THROW(GroundSet({1.0, 0.0}), PreconditionError);
  EXPECT_THROW(GroundSet({1.0, -2.0}), PreconditionError);
}

TEST(GroundSetTest, TiesBreakTowardLowerLabel) {
  GroundSet g({2.0, 5.0, 2.0});
  EXPECT_TRUE(g.Heavier(1, 0));
  EXPECT_TRUE(g.Heavier(0, 2));
  EXPECT_FALSE(g.HasDistinctWeights());
}

TEST(IsIndependentTest, SpecExamples) {
  UniformMatroid u(4, 2);
  EXPECT_FALSE(u.IsIndependent(ElementSet{0, 1, 2}));
  EXPECT_TRUE(u.IsIndependent(ElementSet{}));
  auto k4 = GraphicMatroid::Complete(4);
  EXPECT_TRUE(k4->IsIndependent(ElementSet{}));
  const ElementSet triangle = {kE01, kE02, kE12};
  ASSERT_TRUE(GraphHasCycle(4, k4->edges(), triangle));
  EXPECT_FALSE(k4->IsIndependent(triangle));
}

TEST(IsIndependentTest, OutOfRangeLabelThrows) {
  UniformMatroid u(3, 1);
  EXPECT_THROW(u.IsIndependent(ElementSet{3}), std::out_of_range);
  EXPECT_THROW(u.Rank(ElementSet{-1}), std::out_of_range);
  EXPECT_THROW(u.Span(ElementSet{7}), std::out_of_range);
}

TEST(IsIndependentTest, GraphicAgreesWithCycleDetection) {
  auto k5 = GraphicMatroid::Complete(5);
  for (Mask s = 0; s < (Mask{1} << 10); ++s) {
    const ElementSet set = FromMask(s);
    EXPECT_EQ(k5->IsIndependent(set), !GraphHasCycle(5, k5->edges(), set));
  }
}

TEST(RankTest, SpecExamples) {
  UniformMatroid u(4, 2);
  EXPECT_EQ(u.Rank(ElementSet{0, 1, 2}), 2);
  EXPECT_EQ(u.Rank(ElementSet{}), 0);
  auto k4 = GraphicMatroid::Complete(4);
  EXPECT_EQ(k4->Rank(AllElements(6)), 3);
}

TEST(SpanTest, SpecExamples) {
  UniformMatroid u1(3, 1);
  EXPECT_EQ(u1.Span(ElementSet{0}), (ElementSet{0, 1, 2}));
  UniformMatroid u2(4, 2);
  EXPECT_EQ(u2.Span(ElementSet{0}), (ElementSet{0}));
  // Path 0-1-2 spans the closing edge (0,2).
  auto k4 = GraphicMatroid::Complete(4);
  EXPECT_EQ(k4->Span(ElementSet{kE01, kE12}), (ElementSet{kE01, kE02, kE12}));
}

TEST(EnumerateFlatsTest, UniformExamples) {
  FlatList f1 = EnumerateFlats(UniformMatroid(3, 1));
  EXPECT_EQ(f1.flats, (std::vector<ElementSet>{{}, {0, 1, 2}}));
  FlatList f2 = EnumerateFlats(UniformMatroid(3, 2));
  EXPECT_EQ(f2.flats, (std::vector<ElementSet>{{}, {0}, {1}, {2}, {0, 1, 2}}));
  EXPECT_EQ(f2.ranks, (std::vector<int>{0, 1, 1, 1, 2}));
}

TEST(EnumerateFlatsTest, K4MatchesClosureOfEverySubset) {
  auto k4 = GraphicMatroid::Complete(4);
  const auto indep = [&](Mask s) { return !GraphHasCycle(4, k4->edges(), FromMask(s)); };
  std::vector<Mask> closures;
  for (Mask s = 0; s < 64; ++s) closures.push_back(TableSpan(6, indep, s));
  std::sort(closures.begin(), closures.end());
  closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
  FlatList flats = EnumerateFlats(*k4);
  ASSERT_EQ(closures.size(), 15u);
  ASSERT_EQ(flats.flats.size(), 15u);
  std::vector<Mask> got;
  for (const auto& f : flats.flats) got.push_back(ToMask(f));
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, closures);
  // Rank-j flat counts stay within n^j.
  std::vector<int> per_rank(4, 0);
  for (int r : flats.ranks) ++per_rank[r];
  for (int j = 0; j <= 3; ++j) EXPECT_LE(per_rank[j], static_cast<int>(std::pow(6, j)));
}

TEST(EnumerateFlatsTest, RejectsLargeGroundSet) {
  EXPECT_THROW(EnumerateFlats(UniformMatroid(17, 2)), EnumerationLimitError);
}

TEST(MaxWeightBasisTest, SpecExamples) {
  UniformMatroid u(3, 2);
  GroundSet g({5, 3, 1});
  EXPECT_EQ(MaxWeightBasis(u, g, ElementSet{0, 1, 2}), (ElementSet{0, 1}));
  EXPECT_TRUE(MaxWeightBasis(u, g, ElementSet{}).empty());
}

TEST(MaxWeightBasisTest, K4IsMaximumSpanningTree) {
  auto k4 = GraphicMatroid::Complete(4);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GroundSet g = DistinctWeights(6, seed);
    double best = 0;
    for (Mask s = 0; s < 64; ++s) {
      if (std::popcount(s) == 3 && !GraphHasCycle(4, k4->edges(), FromMask(s))) {
        best = std::max(best, g.Weight(FromMask(s)));
      }
    }
    const ElementSet tree = MaxWeightBasis(*k4, g, AllElements(6));
    EXPECT_EQ(tree.size(), 3u);
    EXPECT_DOUBLE_EQ(g.Weight(tree), best);
  }
}

TEST(ImprovesTest, SpecExamples) {
  // a:5, b:3, i:4.
  GroundSet g({5, 3, 4});
  const ElementSet s = {0, 1};
  EXPECT_FALSE(Improves(UniformMatroid(3, 1), g, s, 2));
  EXPECT_TRUE(Improves(UniformMatroid(3, 2), g, s, 2));
  EXPECT_TRUE(Improves(*GraphicMatroid::Complete(4), DistinctWeights(6, 3), ElementSet{}, 2));
  EXPECT_THROW(Improves(UniformMatroid(3, 2), g, s, 0), PreconditionError);
}

TEST(CheckAxiomsTest, SpecExamples) {
  EXPECT_TRUE(CheckAxioms(UniformMatroid(5, 2)).ok);
  EXPECT_TRUE(CheckAxioms(*GraphicMatroid::Complete(4)).ok);
  ExplicitMatroid broken(2, {{}, {0}, {0, 1}}, ExplicitMatroid::Validation::kNone);
  AxiomReport report = CheckAxioms(broken);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.violation, "downward-closure");
  EXPECT_EQ(report.s, (ElementSet{1}));
  EXPECT_EQ(report.t, (ElementSet{0, 1}));
}

TEST(CheckAxiomsTest, DetectsBrokenAugmentation) {
  ExplicitMatroid broken(3, {{}, {0}, {1}, {2}, {1, 2}});
  AxiomReport report = CheckAxioms(broken);
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.violation, "augmentation");
  EXPECT_EQ(report.s, (ElementSet{0}));
  EXPECT_EQ(report.t, (ElementSet{1, 2}));
}

TEST(CheckAxiomsTest, RejectsLargeGroundSet) {
  EXPECT_THROW(CheckAxioms(UniformMatroid(9, 2)), EnumerationLimitError);
}

TEST(ParallelClassCountTest, SpecExamples) {
  EXPECT_EQ(ParallelClassCount(UniformMatroid(5, 1)), 1);
  EXPECT_EQ(ParallelClassCount(UniformMatroid(5, 2)), 5);
  EXPECT_EQ(ParallelClassCount(UniformMatroid(5, 4)), 5);
  GraphicMatroid doubled(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}});
  EXPECT_EQ(ParallelClassCount(doubled), 3);
}

TEST(LoopTest, ConstructionRejectsLoops) {
  EXPECT_THROW(GraphicMatroid(2, {{0, 1}, {1, 1}}), LoopError);
  EXPECT_THROW(LinearMatroid(3, {{1, 0}, {2, 0}}), LoopError);
  EXPECT_THROW(ExplicitMatroid(2, {{}, {0}}), LoopError);
  EXPECT_THROW(UniformMatroid(3, 0), LoopError);
  EXPECT_THROW(PartitionMatroid::FromBlockSizes({2, 2}, {1, 0}), LoopError);
}

TEST(LinearMatroidTest, RejectsNonPrimeField) {
  EXPECT_THROW(LinearMatroid(4, {{1, 1}}), PreconditionError);
  EXPECT_THROW(LinearMatroid(263, {{1, 1}}), PreconditionError);
  EXPECT_NO_THROW(LinearMatroid(257, {{1, 256}}));
}

TEST(LinearMatroidTest, CircuitOfDependentColumn) {
  // Columns over GF(5): e0=(1,0), e1=(0,1), e2=(1,1), e3=(2,0).
  LinearMatroid m(5, {{1, 0, 1, 2}, {0, 1, 1, 0}});
  EXPECT_EQ(m.Circuit(ElementSet{0, 1}, 2), (ElementSet{0, 1}));
  EXPECT_EQ(m.Circuit(ElementSet{0, 1}, 3), (ElementSet{0}));
  EXPECT_FALSE(m.Circuit(ElementSet{0}, 1).has_value());
}

// Every kind: rank is bounded, monotone and submodular; span is a closure
// operator; all of it agrees with a direct scan of the independence table.
TEST(MatroidPropertyTest, RankAndSpanAgreeWithTableScan) {
  for (const auto& [name, m] : SmallMatroidZoo(11)) {
    SCOPED_TRACE(name);
    const int n = m->size();
    const Mask limit = Mask{1} << n;
    const auto indep = Predicate(*m);
    std::vector<int> rank(limit);
    for (Mask s = 0; s < limit; ++s) {
      rank[s] = m->Rank(FromMask(s));
      ASSERT_EQ(rank[s], TableRank(n, indep, s));
      ASSERT_LE(rank[s], std::popcount(s));
      const Mask span = ToMask(m->Span(FromMask(s)));
      ASSERT_EQ(span, TableSpan(n, indep, s));
      ASSERT_EQ(span & s, s);
      ASSERT_EQ(ToMask(m->Span(FromMask(span))), span);
      ASSERT_EQ(m->Rank(FromMask(span)), rank[s]);
    }
    for (Mask s = 0; s < limit; ++s) {
      for (Mask t = 0; t < limit; ++t) {
        if ((s & t) == s) ASSERT_LE(rank[s], rank[t]);
        ASSERT_LE(rank[s | t] + rank[s & t], rank[s] + rank[t]);
      }
    }
  }
}

TEST(MatroidPropertyTest, CircuitMatchesExchangeDefinition) {
  for (const auto& [name, m] : SmallMatroidZoo(12)) {
    SCOPED_TRACE(name);
    const int n = m->size();
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      const ElementSet base = FromMask(s);
      if (!m->IsIndependent(base)) continue;
      for (Element x = 0; x < n; ++x) {
        if (s & (Mask{1} << x)) continue;
        ElementSet plus = base;
        plus.push_back(x);
        auto circuit = m->Circuit(base, x);
        ASSERT_EQ(!circuit.has_value(), m->IsIndependent(plus));
        if (!circuit) continue;
        ElementSet expected;
        for (Element y : base) {
          ElementSet swapped;
          for (Element z : plus) {
            if (z != y) swapped.push_back(z);
          }
          if (m->IsIndependent(swapped)) expected.push_back(y);
        }
        std::sort(circuit->begin(), circuit->end());
        ASSERT_EQ(*circuit, expected);
      }
    }
  }
}

TEST(MatroidPropertyTest, AxiomsHoldForEveryKind) {
  for (const auto& [name, m] : SmallMatroidZoo(13)) {
    SCOPED_TRACE(name);
    EXPECT_TRUE(CheckAxioms(*m).ok) << CheckAxioms(*m).ToString();
  }
}

// Fact: improving elements are exactly those outside the span of the heavier
// part, which must match membership in the max-weight basis of s + i.
TEST(MatroidPropertyTest, ImprovesMatchesBasisMembership) {
  for (const auto& [name, m] : SmallMatroidZoo(14)) {
    SCOPED_TRACE(name);
    const int n = m->size();
    const GroundSet g = DistinctWeights(n, 99);
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      const ElementSet set = FromMask(s);
      const ElementSet basis = MaxWeightBasis(*m, g, set);
      ASSERT_TRUE(m->IsIndependent(basis));
      // Greedy optimality against every independent subset.
      for (Mask t = s;; t = (t - 1) & s) {
        if (m->IsIndependent(FromMask(t))) ASSERT_GE(g.Weight(basis) + 1e-9, g.Weight(FromMask(t)));
        if (t == 0) break;
      }
      for (Element b : basis) {
        ElementSet without;
        for (Element e : set) {
          if (e != b) without.push_back(e);
        }
        ASSERT_TRUE(Improves(*m, g, without, b));
      }
      for (Element i = 0; i < n; ++i) {
        if (s & (Mask{1} << i)) continue;
        ElementSet plus = set;
        plus.push_back(i);
        const ElementSet opt = MaxWeightBasis(*m, g, plus);
        const bool in_opt = std::find(opt.begin(), opt.end(), i) != opt.end();
        ASSERT_EQ(Improves(*m, g, set, i), in_opt);
      }
    }
  }
}

}  // namespace
}  // namespace ksec
