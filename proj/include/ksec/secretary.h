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

#ifndef KSEC_SECRETARY_H_
#define KSEC_SECRETARY_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "ksec/ground_set.h"
#include "ksec/matroid.h"
#include "ksec/matroid_union.h"
#include "ksec/phase_plan.h"
#include "ksec/rng.h"

namespace ksec {

// Per-phase sets of one run of the phased algorithm.
struct PhaseTrace {
  int capacity = 0;        // r_l
  int acceptance_cap = 0;  // floor((1 + eps(r_l)) r_l)
  ElementSet sample;       // A_{->l}, in arrival order
  ElementSet arrivals;     // the Z_l arrivals of the phase
  ElementSet eligible;     // A_l
  ElementSet improving;    // members of A_l that improve the sample
  ElementSet accepted;     // ALG_l, in acceptance order
  nlohmann::json ToJson() const;
};

struct TrialRecord {
  std::string algorithm;
  std::vector<int> order;
  ElementSet accepted;  // acceptance order
  // Phased algorithm only: ALG_l for l = 1..L and (Z_0, ..., Z_L).
  std::vector<ElementSet> phase_accepted;
  std::vector<int> phase_sizes;
  std::vector<PhaseTrace> trace;  // filled when tracing
  double weight = 0.0;
  double opt_weight = 0.0;
  int covering_number = -1;  // -1 when not computed

  double ratio() const { return opt_weight > 0.0 ? weight / opt_weight : 0.0; }
  nlohmann::json ToJson() const;
};

struct RunOptions {
  bool trace = false;
  // w(OPT(N, M^k)); computed when absent.
  std::optional<double> opt_weight;
  // Computes phi(ALG) and throws InvariantViolation if it exceeds k.
  bool check_feasibility = true;
};

struct OptResult {
  ElementSet basis;  // heaviest first
  double weight = 0.0;
};

// Max-weight independent set of the whole ground set in u.
OptResult OfflineOpt(const GroundSet& ground, const UnionMatroid& u);

// Throws PreconditionError unless order is a permutation of 0..n-1.
void CheckOrder(std::span<const int> order, int n);

// The phased threshold algorithm for the feasibility constraint M^k. After
// observing Z_0 arrivals, phase l resamples every observed arrival with rate
// 1 - eps(r_l) into A_{->l} and accepts an arrival i of the phase when its
// own coin lands, i improves A_{->l} w.r.t. M^{r_l}, and ALG_l + i stays
// independent in M^{acceptance_cap}. In traced mode phi(ALG_l) is checked
// against the phase cap.
TrialRecord RunAlgorithm1(const GroundSet& ground, const std::shared_ptr<const Matroid>& m, int k,
                          std::span<const int> order, Rng& rng, const PhasePlan& plan,
                          const RunOptions& options = {});

// Classical secretary rule: skip floor(n/e) arrivals, then take the first
// arrival heavier than all of them.
TrialRecord RunDynkin(const GroundSet& ground, std::span<const int> order);

// Observes ceil(eps n) arrivals, sets the threshold at the ceil(eps k)-th
// heaviest of them (none if fewer were observed), then accepts arrivals above
// the threshold while fewer than k are accepted and the accepted set stays
// independent in `feasibility`.
TrialRecord RunNaiveThreshold(const GroundSet& ground, const UnionMatroid& feasibility, int k,
                              double eps, std::span<const int> order);
// sqrt(log2 n) / k^(1/3), clamped to [1/n, 1/2].
double DefaultNaiveEpsilon(int n, int k);

// Observes the first half, then accepts i when i improves the observed half
// w.r.t. `feasibility` and the accepted set stays independent.
TrialRecord RunGreedyBaseline(const GroundSet& ground, const UnionMatroid& feasibility,
                              std::span<const int> order);

// Accepts every arrival that keeps the accepted set independent. Equals
// OPT(N, M^k) when k >= n.
TrialRecord RunAcceptAll(const GroundSet& ground, const UnionMatroid& feasibility,
                         std::span<const int> order);

}  // namespace ksec

#endif  // KSEC_SECRETARY_H_
