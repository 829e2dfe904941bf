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

#ifndef KSEC_VERIFY_H_
#define KSEC_VERIFY_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "ksec/matroid.h"

namespace ksec {

struct VerifyCase {
  std::string name;
  std::shared_ptr<const Matroid> matroid;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  // Random (matroid, S) pairs with 9 <= n <= 12 for the three-way equality
  // and the union-rank min-formula.
  int sampled_pairs = 100;
  // Stop after this many counterexamples.
  int max_counterexamples = 10;
};

struct VerifyReport {
  std::int64_t checks = 0;
  std::vector<nlohmann::json> counterexamples;
  bool ok() const { return counterexamples.empty(); }
  nlohmann::json ToJson() const;
};

// One of every built-in kind with n <= 8, plus a heterogeneous union list.
std::vector<VerifyCase> DefaultVerifyCases(std::uint64_t seed);

// For every case with n <= 8, exhaustively: matroid axioms; covering number
// = Nash-Williams value = flats bound for every nonempty S; union rank of
// M^2 and M^3 against the min-formula; improves() against OPT membership in M
// and M^2; the block closed form against augmenting paths. Cases above 8
// elements are rejected with EnumerationLimitError. Then heterogeneous
// pairwise unions of the cases sharing a ground set size, and the sampled
// pairs.
VerifyReport RunVerify(const std::vector<VerifyCase>& cases, const VerifyOptions& options);

}  // namespace ksec

#endif  // KSEC_VERIFY_H_
