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

#ifndef KSEC_INSTANCE_H_
#define KSEC_INSTANCE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ksec/ground_set.h"
#include "ksec/matroid.h"
#include "ksec/matroid_union.h"

namespace ksec {

// Instance file format:
//
//   {
//     "matroid": {"kind": <kind>, ...parameters},
//     "weights": [w_0, ..., w_{n-1}]
//              | {"generator": "uniform" | "exponential", "seed": s, "base": b},
//     "k": fold,
//     "seed": default seed for generators that omit one
//   }
//
// Matroid kinds and their parameters:
//   uniform          n, cap
//   partition        blocks (block id per element) or block_sizes; caps
//   graphic          vertices, edges [[u, v], ...]
//   complete_graph   vertices
//   random_graph     vertices, p_edge, seed        (G(v, p); edges in (u, v) order)
//   linear           prime, matrix (rows; columns are elements)
//   random_linear    prime, rank, n, seed          (nonzero random columns)
//   explicit         n, independent [[ids], ...]  (axiom-checked for n <= 8)
//   random_explicit  prime, rank, n, seed          (tabulated random_linear, n <= 16)
//   hard_union       k, eps, m                     (see GenerateHardUnion)
//
// Weights: "uniform" draws i.i.d. from (0, 1] and redraws ties; "exponential"
// assigns base^j for a random permutation j of 0..n-1 (base defaults to 2).
struct Instance {
  std::string kind;
  GroundSet ground;
  // The matroid M of the constraint M^k; null for hard_union.
  std::shared_ptr<const Matroid> base;
  int k = 1;
  std::shared_ptr<const UnionMatroid> feasibility;
  // Input spec with defaults filled in.
  nlohmann::json spec;

  int n() const { return ground.size(); }
};

// Builds a matroid from the "matroid" object. Throws ConfigError on malformed
// input and LoopError if the result has loops. check_axioms = false admits
// explicit families that are not matroids, for the verifier.
std::shared_ptr<const Matroid> MatroidFromJson(const nlohmann::json& spec,
                                               std::uint64_t default_seed,
                                               bool check_axioms = true);

// Weights from a list or a generator object.
std::vector<double> WeightsFromJson(const nlohmann::json& spec, int n,
                                    std::uint64_t default_seed);

std::vector<double> UniformWeights(int n, std::uint64_t seed);
std::vector<double> ExponentialWeights(int n, double base, std::uint64_t seed);

// k_override replaces the spec's "k".
Instance BuildInstance(const nlohmann::json& spec, std::optional<int> k_override = std::nullopt);
Instance LoadInstance(const std::string& path, std::optional<int> k_override = std::nullopt);

struct HardUnion {
  GroundSet ground;
  std::shared_ptr<const Matroid> partition;  // 2k/eps blocks of size m, cap 1
  std::shared_ptr<const UnionMatroid> feasibility;  // partition v U^k
  int blocks = 0;
};

// The union of a partition matroid (2k/eps blocks of m consecutive elements,
// one element per block) with k copies of the 1-uniform matroid. The hard
// weight distribution this construction is meant for is not constructive;
// the weights here are a stand-in: element t of block b gets base^pi_b(t) *
// (1 + u) for a random permutation pi_b of the block and u uniform in (0, 1).
HardUnion GenerateHardUnion(int k, double eps, int m, std::uint64_t seed, double base = 8.0);

}  // namespace ksec

#endif  // KSEC_INSTANCE_H_
