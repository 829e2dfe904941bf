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

#ifndef KSEC_PHASE_PLAN_H_
#define KSEC_PHASE_PLAN_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ksec/rng.h"

namespace ksec {

// Schedule of the phased threshold algorithm. Phases are 1..L; vectors are
// indexed by phase - 1.
struct PhasePlan {
  int n = 0;
  int k = 0;
  double c = 0.0;
  // log2 of the count that enters eps: n, or the parallel class count.
  double log_n = 0.0;
  // True when C was supplied by the caller and L was rounded.
  bool experimental = false;
  int num_phases = 0;
  double eps_k = 0.0;
  std::vector<int> capacities;       // r_l = floor(2^(l-L-1) k)
  std::vector<int> acceptance_caps;  // floor((1 + eps(r_l)) r_l)
  std::vector<double> subsample_rates;  // 1 - eps(r_l)
  // sum over phases of (1 + eps(r_l)) r_l, strictly below k.
  double feasibility_sum = 0.0;

  // C * sqrt(log2(n) / x).
  double Epsilon(double x) const;
  nlohmann::json ToJson() const;
};

struct PlanFallback {
  std::string reason;
};

struct PlanOptions {
  // Experimental mode: any C > 0, L rounded to the nearest positive integer.
  std::optional<double> c_override;
  // Parallel class count to use in place of n inside eps.
  std::optional<int> nsim;
  // Skips the k <= n check; for exercising the arithmetic only.
  bool allow_k_above_n = false;
};

// Proof mode picks C in [10, 20) so that L = log2(1/eps(k)) - 2 is a
// positive integer, and falls back when no such L exists. Throws ConfigError
// for k <= 0, for k > n unless allowed, and for a non-positive C override.
std::variant<PhasePlan, PlanFallback> PlanPhases(int n, int k, const PlanOptions& options = {});

// Bin probabilities 2^(max(1,l)-L-1) for l = 0..L; they sum to exactly 1.
std::vector<double> PhaseBinProbabilities(int num_phases);

// Throws n balls into bins 0..L with the probabilities above.
std::vector<int> SamplePhaseSizes(int n, int num_phases, Rng& rng);
inline std::vector<int> SamplePhaseSizes(const PhasePlan& plan, Rng& rng) {
  return SamplePhaseSizes(plan.n, plan.num_phases, rng);
}

}  // namespace ksec

#endif  // KSEC_PHASE_PLAN_H_
