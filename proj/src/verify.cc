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

#include "ksec/verify.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "ksec/covering.h"
#include "ksec/errors.h"
#include "ksec/matroid_ops.h"
#include "ksec/matroid_union.h"
#include "ksec/matroids.h"
#include "ksec/rng.h"

namespace ksec {
namespace {

std::vector<std::pair<int, int>> RandomMultigraph(int vertices, int edges, Rng& rng) {
  std::vector<std::pair<int, int>> out;
  while (static_cast<int>(out.size()) < edges) {
    const int u = static_cast<int>(rng.UniformInt(vertices));
    const int v = static_cast<int>(rng.UniformInt(vertices));
    if (u != v) out.emplace_back(std::min(u, v), std::max(u, v));
  }
  return out;
}

FieldMatrix RandomNonzeroColumns(int prime, int rows, int cols, Rng& rng) {
  FieldMatrix a(rows, std::vector<int>(cols, 0));
  for (int c = 0; c < cols; ++c) {
    bool nonzero = false;
    while (!nonzero) {
      for (int r = 0; r < rows; ++r) {
        a[r][c] = static_cast<int>(rng.UniformInt(prime));
        nonzero |= a[r][c] != 0;
      }
    }
  }
  return a;
}

GroundSet ShuffledWeights(int n, Rng& rng) {
  std::vector<double> w(n);
  const std::vector<int> perm = rng.Permutation(n);
  for (int i = 0; i < n; ++i) w[i] = 1.0 + perm[i];
  return GroundSet(std::move(w));
}

// A random loopless matroid with n elements, cycling through the kinds.
std::shared_ptr<const Matroid> RandomMatroid(int n, int which, Rng& rng) {
  switch (which % 5) {
    case 0:
      return std::make_shared<UniformMatroid>(n, 1 + static_cast<int>(rng.UniformInt(n)));
    case 1: {
      std::vector<int> block_of(n), caps(3);
      for (int& b : block_of) b = static_cast<int>(rng.UniformInt(3));
      for (int& c : caps) c = 1 + static_cast<int>(rng.UniformInt(3));
      return std::make_shared<PartitionMatroid>(block_of, caps);
    }
    case 2:
      return std::make_shared<GraphicMatroid>(
          5, RandomMultigraph(5, n, rng));
    case 3: {
      const int primes[] = {2, 3, 5, 7};
      const int p = primes[rng.UniformInt(4)];
      return std::make_shared<LinearMatroid>(p, RandomNonzeroColumns(p, 3 + static_cast<int>(rng.UniformInt(2)), n, rng));
    }
    default: {
      const LinearMatroid lin(3, RandomNonzeroColumns(3, 4, n, rng));
      return ExplicitMatroid::Tabulate(lin);
    }
  }
}

class Checker {
 public:
  Checker(VerifyReport& report, int limit) : report_(report), limit_(limit) {}

  bool full() const { return static_cast<int>(report_.counterexamples.size()) >= limit_; }

  // Records a mismatch unless got == expected.
  void Expect(bool equal, const std::string& check, const std::string& name, const Matroid& m,
              const ElementSet& s, nlohmann::json expected, nlohmann::json got,
              nlohmann::json extra = nullptr) {
    ++report_.checks;
    if (equal || full()) return;
    nlohmann::json cx = {{"check", check},       {"case", name},
                         {"matroid", m.ToJson()}, {"set", s},
                         {"expected", expected}, {"got", got}};
    if (!extra.is_null()) cx["detail"] = extra;
    report_.counterexamples.push_back(std::move(cx));
  }

  void Error(const std::string& check, const std::string& name, const Matroid& m,
             const std::string& what) {
    if (full()) return;
    report_.counterexamples.push_back(
        {{"check", check}, {"case", name}, {"matroid", m.ToJson()}, {"error", what}});
  }

 private:
  VerifyReport& report_;
  int limit_;
};

void CheckCoveringTriple(Checker& c, const std::string& name,
                         const std::shared_ptr<const Matroid>& m, const ElementSet& s) {
  const int phi = CoveringNumber(m, s).value;
  const int nw = NashWilliamsValue(*m, s).value;
  const WitnessedValue flats = FlatsCoverBound(*m, s);
  c.Expect(phi == nw, "covering=nash-williams", name, *m, s, nw, phi);
  c.Expect(phi == flats.value, "covering=flats-bound", name, *m, s, flats.value, phi,
           {{"flat", flats.witness}});
}

void CheckUnionRank(Checker& c, const std::string& name, const UnionMatroid& u,
                    const Matroid& shown, const ElementSet& s) {
  const int rank = u.Rank(s);
  const int formula = UnionRankMinFormula(u, s);
  c.Expect(rank == formula, "union-rank=min-formula", name, shown, s, formula, rank,
           {{"fold", u.fold()}});
  const PartitionCertificate cert = u.MaxIndependent(s);
  c.Expect(u.Validate(cert), "certificate-valid", name, shown, s, true, false, cert.ToJson());
}

void CheckCase(Checker& c, const VerifyCase& vc, Rng& rng) {
  const Matroid& m = *vc.matroid;
  const int n = m.size();
  const AxiomReport axioms = CheckAxioms(m);
  c.Expect(axioms.ok, "axioms", vc.name, m, axioms.s, "matroid",
           axioms.violation, {{"s", axioms.s}, {"t", axioms.t}});
  if (!axioms.ok) return;  // the remaining checks assume a matroid

  const Mask limit = Mask{1} << n;
  const GroundSet ground = ShuffledWeights(n, rng);
  std::vector<UnionMatroid> powers;
  for (int k = 1; k <= 3; ++k) {
    powers.push_back(UnionMatroid::Power(vc.matroid, k, {.block_fast_path = false}));
  }
  for (Mask bits = 0; bits < limit && !c.full(); ++bits) {
    const ElementSet s = FromMask(bits);
    if (!s.empty()) CheckCoveringTriple(c, vc.name, vc.matroid, s);
    CheckUnionRank(c, vc.name, powers[1], m, s);
    CheckUnionRank(c, vc.name, powers[2], m, s);
    for (Element i = 0; i < n; ++i) {
      if (bits >> i & 1) continue;
      ElementSet with = s;
      with.push_back(i);
      const ElementSet opt = MaxWeightBasis(m, ground, with);
      const bool in_opt = std::find(opt.begin(), opt.end(), i) != opt.end();
      c.Expect(Improves(m, ground, s, i) == in_opt, "improves", vc.name, m, s, in_opt, !in_opt,
               {{"i", i}});
      const ElementSet opt2 = powers[1].MaxWeightBasis(ground, with);
      const bool in_opt2 = std::find(opt2.begin(), opt2.end(), i) != opt2.end();
      c.Expect(powers[1].Improves(ground, s, i) == in_opt2, "improves-union", vc.name, m, s,
               in_opt2, !in_opt2, {{"i", i}, {"fold", 2}});
    }
  }
  if (m.blocks() != nullptr) {
    for (int k = 1; k <= 3; ++k) {
      const UnionMatroid fast = UnionMatroid::Power(vc.matroid, k);
      for (Mask bits = 0; bits < limit && !c.full(); ++bits) {
        const ElementSet s = FromMask(bits);
        const bool a = fast.IsIndependent(s).independent;
        const bool b = powers[k - 1].IsIndependent(s).independent;
        c.Expect(a == b, "block-closed-form", vc.name, m, s, b, a, {{"fold", k}});
      }
    }
  }
}

}  // namespace

nlohmann::json VerifyReport::ToJson() const {
  return {{"ok", ok()}, {"checks", checks}, {"counterexamples", counterexamples}};
}

std::vector<VerifyCase> DefaultVerifyCases(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VerifyCase> cases;
  cases.push_back({"uniform(8,1)", std::make_shared<UniformMatroid>(8, 1)});
  cases.push_back({"uniform(8,3)", std::make_shared<UniformMatroid>(8, 3)});
  cases.push_back({"uniform(6,6)", std::make_shared<UniformMatroid>(6, 6)});
  cases.push_back({"partition(3,3,2|1,2,1)",
                   PartitionMatroid::FromBlockSizes({3, 3, 2}, {1, 2, 1})});
  cases.push_back({"partition(2,2,2,2|1,1,2,1)",
                   PartitionMatroid::FromBlockSizes({2, 2, 2, 2}, {1, 1, 2, 1})});
  cases.push_back({"graphic(K4)", GraphicMatroid::Complete(4)});
  cases.push_back({"graphic(K3+double)",
                   std::make_shared<GraphicMatroid>(
                       3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {0, 1}})});
  cases.push_back({"graphic(multigraph)",
                   std::make_shared<GraphicMatroid>(4, RandomMultigraph(4, 8, rng))});
  cases.push_back({"linear(GF2)",
                   std::make_shared<LinearMatroid>(2, RandomNonzeroColumns(2, 3, 7, rng))});
  cases.push_back({"linear(GF3)",
                   std::make_shared<LinearMatroid>(3, RandomNonzeroColumns(3, 3, 8, rng))});
  cases.push_back({"linear(GF257)",
                   std::make_shared<LinearMatroid>(257, RandomNonzeroColumns(257, 2, 6, rng))});
  const LinearMatroid lin(5, RandomNonzeroColumns(5, 3, 8, rng));
  cases.push_back({"explicit(tabulated)", ExplicitMatroid::Tabulate(lin)});
  return cases;
}

VerifyReport RunVerify(const std::vector<VerifyCase>& cases, const VerifyOptions& options) {
  for (const VerifyCase& vc : cases) {
    if (vc.matroid->size() > kMaxAxiomCheck) {
      throw EnumerationLimitError("verify case " + vc.name + " has " +
                                  std::to_string(vc.matroid->size()) + " elements; the cap is " +
                                  std::to_string(kMaxAxiomCheck));
    }
  }
  VerifyReport report;
  Checker c(report, options.max_counterexamples);
  Rng rng(options.seed);
  std::vector<char> sound(cases.size(), 0);
  for (size_t i = 0; i < cases.size() && !c.full(); ++i) {
    const size_t before = report.counterexamples.size();
    try {
      CheckCase(c, cases[i], rng);
    } catch (const Error& e) {
      c.Error("exception", cases[i].name, *cases[i].matroid, e.what());
    }
    sound[i] = report.counterexamples.size() == before;
  }

  // Heterogeneous unions of sound cases over the same ground set size.
  for (size_t a = 0; a < cases.size() && !c.full(); ++a) {
    for (size_t b = a + 1; b < cases.size() && !c.full(); ++b) {
      if (!sound[a] || !sound[b]) continue;
      const int n = cases[a].matroid->size();
      if (cases[b].matroid->size() != n) continue;
      const UnionMatroid u({cases[a].matroid, cases[b].matroid}, {.block_fast_path = false});
      const std::string name = cases[a].name + " v " + cases[b].name;
      for (Mask bits = 0; bits < (Mask{1} << n) && !c.full(); ++bits) {
        CheckUnionRank(c, name, u, *cases[a].matroid, FromMask(bits));
      }
    }
  }

  for (int t = 0; t < options.sampled_pairs && !c.full(); ++t) {
    const int n = 9 + static_cast<int>(rng.UniformInt(4));
    const auto m = RandomMatroid(n, t, rng);
    ElementSet s;
    while (s.empty()) {
      s.clear();
      for (Element e = 0; e < n; ++e) {
        if (rng.Bernoulli(0.6)) s.push_back(e);
      }
    }
    const std::string name = "sampled#" + std::to_string(t);
    try {
      CheckCoveringTriple(c, name, m, s);
      const int k = 2 + static_cast<int>(rng.UniformInt(2));
      CheckUnionRank(c, name, UnionMatroid::Power(m, k, {.block_fast_path = false}), *m, s);
    } catch (const Error& e) {
      c.Error("exception", name, *m, e.what());
    }
  }
  return report;
}

}  // namespace ksec
