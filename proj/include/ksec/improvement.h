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

#ifndef KSEC_IMPROVEMENT_H_
#define KSEC_IMPROVEMENT_H_

#include <span>
#include <vector>

#include "ksec/ground_set.h"
#include "ksec/matroid_union.h"

namespace ksec {

// Answers "does i improve the sample A w.r.t. the union U" for many i at
// once. i improves A iff i is outside the span of the elements of A heavier
// than i, and that span equals the span of the matching prefix of the greedy
// basis of A. One sweep in decreasing weight order grows the prefix
// certificate and probes each query against it.
class ImprovementTester {
 public:
  // `sample` need not be sorted.
  ImprovementTester(const GroundSet& ground, const UnionMatroid& u,
                    std::span<const Element> sample);

  // flags[q] for queries[q]; queries must lie outside the sample.
  std::vector<char> Evaluate(std::span<const Element> queries) const;

  // Greedy max-weight basis of the sample, heaviest first.
  ElementSet Basis() const;

 private:
  const GroundSet& ground_;
  const UnionMatroid& union_;
  ElementSet sample_;  // heaviest first
  std::vector<char> in_sample_;
};

}  // namespace ksec

#endif  // KSEC_IMPROVEMENT_H_
