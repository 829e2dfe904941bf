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

#include "ksec/trials.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <variant>

#include "ksec/covering.h"
#include "ksec/errors.h"
#include "ksec/matroid_ops.h"
#include "ksec/parallel.h"
#include "ksec/stats.h"

namespace ksec {
namespace {

constexpr double kRatioSlack = 1e-9;

// How an algorithm slot is run for this instance.
struct Slot {
  Algorithm algorithm;
  std::string label;
  std::optional<PhasePlan> plan;  // alg1 with a valid plan
  Algorithm runner;               // what actually runs
  nlohmann::json detail;
};

Slot MakeSlot(Algorithm a, const Instance& inst, const TrialConfig& config) {
  Slot slot{a, std::string(AlgorithmName(a)), std::nullopt, a, nullptr};
  if (a != Algorithm::kAlg1) return slot;
  auto fallback = [&](const std::string& reason, Algorithm runner, const char* suffix) {
    slot.runner = runner;
    slot.label += suffix;
    slot.detail = {{"fallback", reason}};
  };
  if (!inst.base) {
    fallback("feasibility is not a k-fold power of one matroid", Algorithm::kGreedy,
             ":fallback");
    return slot;
  }
  if (inst.k > inst.n()) {
    fallback("k > n: accepting every feasible element is optimal", Algorithm::kAcceptAll,
             ":acceptall");
    return slot;
  }
  PlanOptions options;
  options.c_override = config.c_override;
  if (config.nsim_mode) options.nsim = ParallelClassCount(*inst.base);
  auto plan = PlanPhases(inst.n(), inst.k, options);
  if (auto* fb = std::get_if<PlanFallback>(&plan)) {
    fallback(fb->reason, Algorithm::kGreedy, ":fallback");
    return slot;
  }
  slot.plan = std::get<PhasePlan>(plan);
  slot.detail = {{"plan", slot.plan->ToJson()}};
  return slot;
}

}  // namespace

std::string_view AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kAlg1: return "alg1";
    case Algorithm::kDynkin: return "dynkin";
    case Algorithm::kNaive: return "naive";
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kAcceptAll: return "acceptall";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kAlg1, Algorithm::kDynkin, Algorithm::kNaive,
                      Algorithm::kGreedy, Algorithm::kAcceptAll}) {
    if (AlgorithmName(a) == name) return a;
  }
  throw ConfigError("unknown algorithm \"" + std::string(name) + "\"");
}

std::string FormatDouble(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

nlohmann::json Aggregate::ToJson() const {
  return {{"algorithm", algorithm}, {"n", n},
          {"k", k},                 {"matroid_kind", matroid_kind},
          {"trials", trials},       {"mean_ratio", mean_ratio},
          {"se", se},               {"min", min_ratio},
          {"max", max_ratio},       {"phi_max", phi_max},
          {"seed", seed},           {"detail", detail}};
}

TrialsResult RunTrials(const Instance& inst, const TrialConfig& config) {
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (config.algorithms.empty()) throw ConfigError("no algorithms selected");
  const int n = inst.n();
  const int k = inst.k;
  const GroundSet& ground = inst.ground;
  const UnionMatroid& feas = *inst.feasibility;

  TrialsResult result;
  result.opt_weight = OfflineOpt(ground, feas).weight;
  const double naive_eps = config.naive_eps.value_or(DefaultNaiveEpsilon(n, k));

  std::vector<Slot> slots;
  for (Algorithm a : config.algorithms) slots.push_back(MakeSlot(a, inst, config));
  const size_t num = slots.size();
  std::vector<std::vector<double>> ratio(num, std::vector<double>(config.trials));
  std::vector<std::vector<int>> phi(num, std::vector<int>(config.trials, -1));
  std::vector<std::vector<double>> seconds(num, std::vector<double>(config.trials));
  if (config.trace) result.records.assign(num, std::vector<TrialRecord>(config.trials));

  ParallelFor(config.trials, config.jobs, [&](int t) {
    const std::vector<int> order = Rng::ForStream(config.seed, t, 0).Permutation(n);
    for (size_t s = 0; s < num; ++s) {
      const Slot& slot = slots[s];
      const auto start = std::chrono::steady_clock::now();
      Rng rng = Rng::ForStream(config.seed, t, 1 + static_cast<int>(slot.algorithm));
      TrialRecord rec;
      switch (slot.runner) {
        case Algorithm::kAlg1: {
          RunOptions options;
          options.trace = config.trace;
          options.opt_weight = result.opt_weight;
          rec = RunAlgorithm1(ground, inst.base, k, order, rng, *slot.plan, options);
          break;
        }
        case Algorithm::kDynkin: rec = RunDynkin(ground, order); break;
        case Algorithm::kNaive: rec = RunNaiveThreshold(ground, feas, k, naive_eps, order); break;
        case Algorithm::kGreedy: rec = RunGreedyBaseline(ground, feas, order); break;
        case Algorithm::kAcceptAll: rec = RunAcceptAll(ground, feas, order); break;
      }
      rec.algorithm = slot.label;
      rec.opt_weight = result.opt_weight;
      if (inst.base && rec.covering_number < 0) {
        rec.covering_number = CoveringNumber(inst.base, rec.accepted).value;
      }
      if (inst.base && rec.covering_number > k) {
        throw InvariantViolation(slot.label + " accepted a set with covering number " +
                                 std::to_string(rec.covering_number) + " > k");
      }
      if (rec.ratio() > 1.0 + kRatioSlack) {
        throw InvariantViolation(slot.label + " beat the offline optimum");
      }
      ratio[s][t] = rec.ratio();
      phi[s][t] = rec.covering_number;
      seconds[s][t] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (config.trace) result.records[s][t] = std::move(rec);
    }
  });

  for (size_t s = 0; s < num; ++s) {
    Aggregate agg;
    agg.algorithm = slots[s].label;
    agg.n = n;
    agg.k = k;
    agg.matroid_kind = inst.kind;
    agg.trials = config.trials;
    const MeanSe ms = MeanAndSe(ratio[s]);
    agg.mean_ratio = ms.mean;
    agg.se = ms.se;
    agg.min_ratio = *std::min_element(ratio[s].begin(), ratio[s].end());
    agg.max_ratio = *std::max_element(ratio[s].begin(), ratio[s].end());
    agg.phi_max = *std::max_element(phi[s].begin(), phi[s].end());
    agg.seed = config.seed;
    agg.wall_seconds = PairwiseSum(seconds[s]);
    agg.detail = slots[s].detail;
    result.aggregates.push_back(std::move(agg));
  }
  return result;
}

void WriteAggregatesCsv(std::ostream& out, const std::vector<Aggregate>& rows,
                        const nlohmann::json& config) {
  out << "# config: " << config.dump() << "\n";
  out << "algorithm,n,k,matroid_kind,trials,mean_ratio,se,min,max,phi_max,seed\n";
  for (const Aggregate& a : rows) {
    out << a.algorithm << ',' << a.n << ',' << a.k << ',' << a.matroid_kind << ',' << a.trials
        << ',' << FormatDouble(a.mean_ratio) << ',' << FormatDouble(a.se) << ','
        << FormatDouble(a.min_ratio) << ',' << FormatDouble(a.max_ratio) << ',' << a.phi_max
        << ',' << a.seed << '\n';
  }
}

}  // namespace ksec
