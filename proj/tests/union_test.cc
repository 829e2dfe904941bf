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
#include <bit>
#include <random>

#include "ksec/covering.h"
#include "ksec/errors.h"
#include "ksec/matroid_union.h"
#include "ksec/matroids.h"
#include "test_util.h"

namespace ksec {
namespace {

using ::ksec::testing::BruteCoveringNumber;
using ::ksec::testing::BrutePartition;
using ::ksec::testing::IndepFn;
using ::ksec::testing::Predicate;
using ::ksec::testing::SmallMatroidZoo;

std::shared_ptr<const Matroid> U(int n, int cap) {
  return std::make_shared<UniformMatroid>(n, cap);
}

ElementSet All(int n) {
  ElementSet s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

TEST(UnionInsertTest, SpecExamples) {
  const UnionMatroid u = UnionMatroid::Power(U(3, 1), 2);
  PartitionCertificate cert = u.NewCertificate();
  ASSERT_TRUE(u.Insert(cert, 0));
  ASSERT_TRUE(u.Insert(cert, 1));
  EXPECT_NE(cert.part_of(0), cert.part_of(1));
  EXPECT_TRUE(u.Validate(cert));
  const nlohmann::json before = cert.ToJson();
  EXPECT_FALSE(u.Insert(cert, 2));
  EXPECT_EQ(cert.ToJson(), before);
  EXPECT_THROW(u.Insert(cert, 0), PreconditionError);
}

TEST(UnionInsertTest, SixthEdgeOfK4FitsTwoForests) {
  auto k4 = GraphicMatroid::Complete(4);
  const IndepFn indep = Predicate(*k4);
  ASSERT_TRUE(BrutePartition({indep, indep}, All(6)).has_value());
  for (bool fast : {true, false}) {
    const UnionMatroid u = UnionMatroid::Power(k4, 2, {.block_fast_path = fast});
    PartitionCertificate cert = u.NewCertificate();
    for (Element e = 0; e < 5; ++e) ASSERT_TRUE(u.Insert(cert, e));
    EXPECT_TRUE(u.Insert(cert, 5));
    EXPECT_TRUE(u.Validate(cert));
    EXPECT_EQ(cert.covered_size(), 6);
  }
}

TEST(UnionInsertTest, RequiresAugmentingPath) {
  // Edge order forces a rearrangement: greedy placement of 0..4 into the
  // first part that fits leaves no room for 5 without moving something.
  auto k4 = GraphicMatroid::Complete(4);
  const UnionMatroid u = UnionMatroid::Power(k4, 2);
  for (const ElementSet& order : {ElementSet{0, 1, 3, 2, 4, 5}, ElementSet{5, 4, 3, 2, 1, 0},
                                  ElementSet{0, 5, 1, 4, 2, 3}}) {
    PartitionCertificate cert = u.NewCertificate();
    for (Element e : order) ASSERT_TRUE(u.Insert(cert, e));
    EXPECT_TRUE(u.Validate(cert));
  }
}

TEST(UnionIsIndependentTest, SpecExamples) {
  const UnionMatroid u = UnionMatroid::Power(U(3, 1), 2);
  EXPECT_TRUE(u.IsIndependent(ElementSet{0, 1}).independent);
  const auto dep = u.IsIndependent(ElementSet{0, 1, 2});
  EXPECT_FALSE(dep.independent);
  ASSERT_TRUE(dep.witness.has_value());
  EXPECT_EQ(*dep.witness, 2);

  auto k5 = GraphicMatroid::Complete(5);
  const IndepFn indep = Predicate(*k5);
  ASSERT_TRUE(BrutePartition({indep, indep, indep}, All(10), true).has_value());
  const auto res = UnionMatroid::Power(k5, 3).IsIndependent(All(10));
  EXPECT_TRUE(res.independent);
  EXPECT_TRUE(UnionMatroid::Power(k5, 3).Validate(res.certificate));
}

TEST(UnionRankTest, SpecExamples) {
  EXPECT_EQ(UnionMatroid::Power(U(4, 1), 2).Rank(All(4)), 2);
  EXPECT_EQ(UnionMatroid::Power(GraphicMatroid::Complete(4), 2).Rank(All(6)), 6);
}

TEST(UnionRankTest, SingleMemberMatchesMemberRank) {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (const auto& [name, m] : SmallMatroidZoo(11)) {
    const UnionMatroid u = UnionMatroid::Power(m, 1);
    for (int t = 0; t < 5; ++t, ++checked) {
      ElementSet s;
      for (Element e = 0; e < m->size(); ++e) {
        if (rng() & 1) s.push_back(e);
      }
      EXPECT_EQ(u.Rank(s), m->Rank(s)) << name;
    }
  }
  EXPECT_GE(checked, 50);
}

TEST(UnionSpanContainsTest, SpecExamples) {
  const UnionMatroid u = UnionMatroid::Power(U(3, 1), 2);
  EXPECT_TRUE(u.SpanContains(ElementSet{0, 1}, 2));
  EXPECT_FALSE(u.SpanContains(ElementSet{0}, 1));
  const UnionMatroid k4 = UnionMatroid::Power(GraphicMatroid::Complete(4), 2);
  for (Element e = 0; e < 6; ++e) {
    ElementSet rest;
    for (Element f = 0; f < 6; ++f) {
      if (f != e) rest.push_back(f);
    }
    EXPECT_FALSE(k4.SpanContains(rest, e));
  }
}

TEST(CoveringNumberTest, CompleteGraphs) {
  for (auto [v, expected] : {std::pair{4, 2}, {5, 3}, {6, 3}}) {
    auto kv = GraphicMatroid::Complete(v);
    const ElementSet edges = All(kv->size());
    const CoveringResult res = CoveringNumber(kv, edges);
    EXPECT_EQ(res.value, expected) << "K" << v;
    EXPECT_EQ(res.certificate.covered_size(), kv->size());
    EXPECT_TRUE(UnionMatroid::Power(kv, res.value).Validate(res.certificate));
    EXPECT_EQ(BruteCoveringNumber(Predicate(*kv), edges), expected);
    EXPECT_EQ(NashWilliamsValue(*kv, edges).value, expected);
  }
}

TEST(CoveringNumberTest, IndependentSetAndEmpty) {
  auto k4 = GraphicMatroid::Complete(4);
  EXPECT_EQ(CoveringNumber(k4, ElementSet{0, 1, 2}).value, 1);
  EXPECT_EQ(CoveringNumber(k4, ElementSet{}).value, 0);
}

TEST(CoveringNumberTest, RejectsLoops) {
  ExplicitMatroid loopy(3, {{}, {0}, {1}, {0, 1}}, ExplicitMatroid::Validation::kNone);
  std::shared_ptr<const Matroid> m(&loopy, [](const Matroid*) {});
  EXPECT_THROW(CoveringNumber(m, ElementSet{0, 2}), LoopError);
}

TEST(NashWilliamsTest, SpecExamples) {
  auto k4 = GraphicMatroid::Complete(4);
  EXPECT_EQ(NashWilliamsValue(*k4, All(6)).value, 2);
  UniformMatroid u(5, 2);
  EXPECT_EQ(NashWilliamsValue(u, All(5)).value, 3);
  EXPECT_EQ(NashWilliamsValue(u, ElementSet{3}).value, 1);
  EXPECT_THROW(NashWilliamsValue(u, ElementSet{}), PreconditionError);
}

TEST(FlatsCoverBoundTest, SpecExamples) {
  auto k4 = GraphicMatroid::Complete(4);
  const WitnessedValue kb = FlatsCoverBound(*k4, All(6));
  EXPECT_EQ(kb.value, 2);
  EXPECT_EQ(kb.witness, All(6));
  UniformMatroid u(5, 2);
  const WitnessedValue ub = FlatsCoverBound(u, All(5));
  EXPECT_EQ(ub.value, 3);
  EXPECT_EQ(ub.witness, All(5));
  EXPECT_EQ(FlatsCoverBound(u, ElementSet{4}).value, 1);
}

// Exhaustive over every nonempty S for each zoo matroid.
TEST(CoveringPropertyTest, ThreeWayEqualityExhaustive) {
  for (const auto& [name, m] : SmallMatroidZoo(3)) {
    const int n = m->size();
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
      const ElementSet set = FromMask(s);
      const int phi = CoveringNumber(m, set).value;
      ASSERT_EQ(phi, NashWilliamsValue(*m, set).value) << name << " S=" << s;
      ASSERT_EQ(phi, FlatsCoverBound(*m, set).value) << name << " S=" << s;
    }
  }
}

TEST(CoveringPropertyTest, AgreesWithBruteForceAndGenericPath) {
  for (const auto& [name, m] : SmallMatroidZoo(5, 7)) {
    const int n = m->size();
    const IndepFn indep = Predicate(*m);
    for (Mask s = 1; s < (Mask{1} << n); s += 3) {
      const ElementSet set = FromMask(s);
      const CoveringResult fast = CoveringNumber(m, set);
      const CoveringResult slow = CoveringNumber(m, set, {.block_fast_path = false});
      ASSERT_EQ(fast.value, slow.value) << name;
      ASSERT_EQ(fast.value, BruteCoveringNumber(indep, set)) << name;
      ASSERT_TRUE(UnionMatroid::Power(m, slow.value, {.block_fast_path = false})
                      .Validate(slow.certificate));
    }
  }
}

TEST(CoveringPropertyTest, IncrementalMatchesFromScratch) {
  for (const auto& [name, m] : SmallMatroidZoo(9)) {
    const int n = m->size();
    for (Mask s = 1; s < (Mask{1} << n); s += 7) {
      const ElementSet set = FromMask(s);
      const int phi = CoveringNumber(m, set, {.block_fast_path = false}).value;
      // From scratch: smallest r whose fresh union accepts the whole set.
      int r = 1;
      while (!UnionMatroid::Power(m, r, {.block_fast_path = false}).IsIndependent(set).independent) {
        ++r;
      }
      ASSERT_EQ(phi, r) << name;
    }
  }
}

// phi(S) <= k iff S is independent in M^k.
TEST(CoveringPropertyTest, CoveringNumberCharacterizesPowers) {
  for (const auto& [name, m] : SmallMatroidZoo(13)) {
    const int n = m->size();
    for (int k = 1; k <= 3; ++k) {
      const UnionMatroid u = UnionMatroid::Power(m, k);
      for (Mask s = 0; s < (Mask{1} << n); ++s) {
        const ElementSet set = FromMask(s);
        ASSERT_EQ(CoveringNumber(m, set).value <= k, u.IsIndependent(set).independent)
            << name << " k=" << k << " S=" << s;
      }
    }
  }
}

TEST(UnionPropertyTest, RankMatchesMinFormulaExhaustive) {
  const auto zoo = SmallMatroidZoo(17);
  for (const auto& [name, m] : zoo) {
    const int n = m->size();
    for (int k : {2, 3}) {
      const UnionMatroid u = UnionMatroid::Power(m, k, {.block_fast_path = false});
      for (Mask s = 0; s < (Mask{1} << n); ++s) {
        const ElementSet set = FromMask(s);
        const int rank = u.Rank(set);
        ASSERT_EQ(rank, UnionRankMinFormula(u, set)) << name << " k=" << k << " S=" << s;
        const PartitionCertificate cert = u.MaxIndependent(set);
        ASSERT_TRUE(u.Validate(cert));
      }
    }
  }
}

TEST(UnionPropertyTest, HeterogeneousRankMatchesMinFormula) {
  // Members over a common 7-element ground set of different kinds.
  std::vector<std::shared_ptr<const Matroid>> members = {
      U(7, 2),
      PartitionMatroid::FromBlockSizes({3, 4}, {1, 2}),
      std::make_shared<GraphicMatroid>(
          4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}, {0, 1}, {1, 3}}),
      std::make_shared<LinearMatroid>(
          3, FieldMatrix{{1, 0, 1, 2, 0, 1, 1}, {0, 1, 1, 1, 1, 0, 2}}),
  };
  for (size_t a = 0; a < members.size(); ++a) {
    for (size_t b = 0; b < members.size(); ++b) {
      const UnionMatroid u({members[a], members[b]});
      for (Mask s = 0; s < (Mask{1} << 7); ++s) {
        const ElementSet set = FromMask(s);
        ASSERT_EQ(u.Rank(set), UnionRankMinFormula(u, set)) << a << "," << b << " S=" << s;
      }
    }
  }
}

TEST(UnionPropertyTest, BlockFastPathMatchesGeneric) {
  std::vector<std::shared_ptr<const Matroid>> kinds = {
      U(8, 1), U(8, 3), PartitionMatroid::FromBlockSizes({3, 3, 2}, {1, 2, 1})};
  for (const auto& m : kinds) {
    for (int k = 1; k <= 3; ++k) {
      const UnionMatroid fast = UnionMatroid::Power(m, k);
      const UnionMatroid slow = UnionMatroid::Power(m, k, {.block_fast_path = false});
      ASSERT_TRUE(fast.block_structured());
      ASSERT_FALSE(slow.block_structured());
      for (Mask s = 0; s < (Mask{1} << 8); ++s) {
        const ElementSet set = FromMask(s);
        const auto a = fast.IsIndependent(set);
        ASSERT_EQ(a.independent, slow.IsIndependent(set).independent);
        ASSERT_EQ(fast.Rank(set), slow.Rank(set));
        ASSERT_TRUE(fast.Validate(a.certificate));
      }
    }
  }
}

TEST(UnionPropertyTest, RankMonotoneAndSubmodular) {
  for (const auto& [name, m] : SmallMatroidZoo(19, 6)) {
    const int n = m->size();
    const UnionMatroid u = UnionMatroid::Power(m, 2);
    std::vector<int> rank(Mask{1} << n);
    for (Mask s = 0; s < (Mask{1} << n); ++s) rank[s] = u.Rank(FromMask(s));
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      for (Mask t = 0; t < (Mask{1} << n); ++t) {
        ASSERT_LE(rank[s | t] + rank[s & t], rank[s] + rank[t]) << name;
        if ((s & t) == s) ASSERT_LE(rank[s], rank[t]) << name;
      }
    }
  }
}

TEST(UnionPropertyTest, ImprovesMatchesMaxWeightBasis) {
  std::mt19937_64 rng(23);
  for (const auto& [name, m] : SmallMatroidZoo(29, 7)) {
    const int n = m->size();
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = 1.0 + i;
    std::shuffle(w.begin(), w.end(), rng);
    const GroundSet ground(w);
    const UnionMatroid u = UnionMatroid::Power(m, 2);
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      const ElementSet set = FromMask(s);
      for (Element i = 0; i < n; ++i) {
        if (s >> i & 1) continue;
        ElementSet with = set;
        with.push_back(i);
        const ElementSet basis = u.MaxWeightBasis(ground, with);
        const bool in_opt = std::find(basis.begin(), basis.end(), i) != basis.end();
        ASSERT_EQ(u.Improves(ground, set, i), in_opt) << name;
      }
    }
  }
}

TEST(PartitionCertificateTest, ValidateRejectsBrokenCertificates) {
  const UnionMatroid u = UnionMatroid::Power(U(4, 1), 2);
  PartitionCertificate wrong_size(4, 3);
  EXPECT_FALSE(u.Validate(wrong_size));
  EXPECT_THROW(u.Insert(wrong_size, 0), PreconditionError);
  PartitionCertificate cert = u.NewCertificate();
  EXPECT_TRUE(u.Validate(cert));
  ASSERT_TRUE(u.Insert(cert, 2));
  EXPECT_EQ(cert.ToJson().dump(), R"({"parts":[[2],[]]})");
}

}  // namespace
}  // namespace ksec
