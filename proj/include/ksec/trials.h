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

#ifndef KSEC_TRIALS_H_
#define KSEC_TRIALS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ksec/instance.h"
#include "ksec/phase_plan.h"
#include "ksec/secretary.h"

namespace ksec {

enum class Algorithm { kAlg1 = 0, kDynkin = 1, kNaive = 2, kGreedy = 3, kAcceptAll = 4 };

std::string_view AlgorithmName(Algorithm a);
// "alg1", "dynkin", "naive", "greedy" or "acceptall"; ConfigError otherwise.
Algorithm ParseAlgorithm(std::string_view name);

struct TrialConfig {
  std::vector<Algorithm> algorithms = {Algorithm::kAlg1};
  int trials = 100;
  std::uint64_t seed = 1;
  // C override for the phase plan; proof constants when empty.
  std::optional<double> c_override;
  // Use the parallel class count in place of n inside eps.
  bool nsim_mode = false;
  // Naive threshold eps; DefaultNaiveEpsilon(n, k) when empty.
  std::optional<double> naive_eps;
  int jobs = 1;
  // Keep every TrialRecord (with per-phase traces for alg1).
  bool trace = false;
};

struct Aggregate {
  // Algorithm id, with ":fallback" or ":acceptall" when alg1 was replaced.
  std::string algorithm;
  int n = 0;
  int k = 0;
  std::string matroid_kind;
  int trials = 0;
  double mean_ratio = 0.0;
  double se = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  // Largest covering number of an accepted set; -1 without a base matroid.
  int phi_max = -1;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  // Plan fallback reason or the plan itself, for the JSON mirror.
  nlohmann::json detail;
  nlohmann::json ToJson() const;  // omits wall_seconds
};

struct TrialsResult {
  std::vector<Aggregate> aggregates;  // one per configured algorithm
  double opt_weight = 0.0;
  // records[a][t] when config.trace is set.
  std::vector<std::vector<TrialRecord>> records;
};

// Runs every algorithm on the same uniformly random arrival order in each
// trial. The order comes from stream (seed, t, 0) and algorithm a draws from
// stream (seed, t, 1 + a), so the output does not depend on config.jobs.
TrialsResult RunTrials(const Instance& instance, const TrialConfig& config);

// Writes "# config: <json>" followed by the header and one row per aggregate.
void WriteAggregatesCsv(std::ostream& out, const std::vector<Aggregate>& rows,
                        const nlohmann::json& config);

std::string FormatDouble(double x);

}  // namespace ksec

#endif  // KSEC_TRIALS_H_
