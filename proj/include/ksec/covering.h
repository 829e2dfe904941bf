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

#ifndef KSEC_COVERING_H_
#define KSEC_COVERING_H_

#include <memory>
#include <span>

#include "ksec/matroid.h"
#include "ksec/matroid_union.h"

namespace ksec {

struct CoveringResult {
  int value = 0;
  // Partition of the input into `value` independent sets.
  PartitionCertificate certificate;
};

// Smallest r such that s splits into r independent sets of m; 0 for empty s.
// Block-structured matroids use max over blocks of ceil(|s ∩ b| / cap_b);
// otherwise r grows one at a time and the certificate for r is carried into
// the union with r + 1 members. Throws LoopError if s contains a loop.
CoveringResult CoveringNumber(const std::shared_ptr<const Matroid>& m,
                              std::span<const Element> s,
                              UnionMatroid::Options options = {});

struct WitnessedValue {
  int value = 0;
  ElementSet witness;  // maximizing subset or flat
};

// max over nonempty T ⊆ s of ceil(|T| / rank(T)). Requires |s| <= 16, s
// nonempty and loop-free.
WitnessedValue NashWilliamsValue(const Matroid& m, std::span<const Element> s);

// max over flats F of rank >= 1 of ceil(|s ∩ F| / rank(F)). Requires
// n <= 16, s nonempty and loop-free. The witness is the highest-rank
// maximizing flat.
WitnessedValue FlatsCoverBound(const Matroid& m, std::span<const Element> s);

// Brute-force union rank min over T ⊆ s of |s \ T| + sum_j rank_j(T).
// Requires |s| <= 16.
int UnionRankMinFormula(const UnionMatroid& u, std::span<const Element> s);

}  // namespace ksec

#endif  // KSEC_COVERING_H_
