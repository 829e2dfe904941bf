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

#ifndef KSEC_MATROID_OPS_H_
#define KSEC_MATROID_OPS_H_

#include <span>
#include <string>
#include <vector>

#include "ksec/ground_set.h"
#include "ksec/matroid.h"

namespace ksec {

inline constexpr int kMaxFlatEnumeration = 16;
inline constexpr int kMaxAxiomCheck = 8;

// Unique max-weight independent subset of s, heaviest first.
ElementSet MaxWeightBasis(const Matroid& m, const GroundSet& ground,
                          std::span<const Element> s);

// Whether i belongs to the max-weight basis of s + i, evaluated as
// "i is outside the span of the elements of s heavier than i".
// Throws PreconditionError if i is already in s.
bool Improves(const Matroid& m, const GroundSet& ground,
              std::span<const Element> s, Element i);

struct FlatList {
  std::vector<ElementSet> flats;
  std::vector<int> ranks;
};

// Every flat, ordered by (rank, bitmask). Requires n <= 16.
FlatList EnumerateFlats(const Matroid& m);

struct AxiomReport {
  bool ok = true;
  // "empty-set", "downward-closure" or "augmentation" on failure.
  std::string violation;
  // Downward closure: s is a dependent subset of the independent t.
  // Augmentation: s, t independent with |s| < |t| and no element of t \ s
  // extends s.
  ElementSet s, t;
  std::string ToString() const;
};

// Exhaustive check over all pairs of subsets. Requires n <= 8.
AxiomReport CheckAxioms(const Matroid& m);

// Number of classes of the "parallel" relation rank({i}) = rank({j}) =
// rank({i, j}) = 1. Assumes a loopless matroid.
int ParallelClassCount(const Matroid& m);

}  // namespace ksec

#endif  // KSEC_MATROID_OPS_H_
