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

#include "ksec/phase_plan.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "ksec/errors.h"

namespace ksec {
namespace {

constexpr double kProofCMin = 10.0;

// Fills capacities, caps, rates and the sum for a fixed (C, L).
void FillPhases(PhasePlan& plan) {
  plan.eps_k = plan.Epsilon(plan.k);
  plan.capacities.clear();
  plan.acceptance_caps.clear();
  plan.subsample_rates.clear();
  plan.feasibility_sum = 0.0;
  for (int l = 1; l <= plan.num_phases; ++l) {
    const int r = static_cast<int>(std::floor(std::ldexp(static_cast<double>(plan.k),
                                                         l - plan.num_phases - 1)));
    const double eps = r > 0 ? plan.Epsilon(r) : INFINITY;
    plan.capacities.push_back(r);
    plan.acceptance_caps.push_back(static_cast<int>(std::floor((1.0 + eps) * r)));
    plan.subsample_rates.push_back(1.0 - eps);
    plan.feasibility_sum += (1.0 + eps) * r;
  }
}

std::string Str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

double PhasePlan::Epsilon(double x) const { return c * std::sqrt(log_n / x); }

nlohmann::json PhasePlan::ToJson() const {
  return {{"n", n},
          {"k", k},
          {"C", c},
          {"log2_n", log_n},
          {"experimental", experimental},
          {"L", num_phases},
          {"eps_k", eps_k},
          {"capacities", capacities},
          {"acceptance_caps", acceptance_caps},
          {"subsample_rates", subsample_rates},
          {"feasibility_sum", feasibility_sum}};
}

std::variant<PhasePlan, PlanFallback> PlanPhases(int n, int k, const PlanOptions& options) {
  if (k <= 0) throw ConfigError("fold k must be positive, got " + std::to_string(k));
  if (k > n && !options.allow_k_above_n) {
    throw ConfigError("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n) +
                      "; accept every feasible element instead");
  }
  if (options.c_override && !(*options.c_override > 0.0)) {
    throw ConfigError("constant C must be positive");
  }
  const int count = options.nsim.value_or(n);
  if (count < 2) {
    return PlanFallback{"log2 of the element count is 0; eps is undefined"};
  }

  PhasePlan plan;
  plan.n = n;
  plan.k = k;
  plan.log_n = std::log2(static_cast<double>(count));
  // eps(k) = C / s, so L = log2(s / C) - 2.
  const double s = std::sqrt(k / plan.log_n);

  if (!options.c_override) {
    // Largest L with C = s / 2^(L+2) >= 10; then C < 20.
    const int t = static_cast<int>(std::floor(std::log2(s / kProofCMin)));
    if (t - 2 < 1) {
      return PlanFallback{"k = " + std::to_string(k) +
                          " is below the proof threshold 64 * 10^2 * log2(n) = " +
                          Str(6400.0 * plan.log_n)};
    }
    plan.num_phases = t - 2;
    plan.c = std::ldexp(s, -t);
  } else {
    plan.experimental = true;
    plan.c = *options.c_override;
    const double l = std::round(std::log2(s / plan.c) - 2.0);
    plan.num_phases = l < 1.0 ? 1 : static_cast<int>(l);
  }
  FillPhases(plan);

  for (size_t l = 0; l < plan.capacities.size(); ++l) {
    if (plan.capacities[l] < 1) {
      return PlanFallback{"phase " + std::to_string(l + 1) + " has capacity 0"};
    }
    if (!(plan.subsample_rates[l] > 0.0)) {
      return PlanFallback{"eps(r_" + std::to_string(l + 1) + ") = " +
                          Str(1.0 - plan.subsample_rates[l]) + " >= 1"};
    }
  }
  if (!(plan.feasibility_sum < k)) {
    return PlanFallback{"phase caps sum to " + Str(plan.feasibility_sum) + " >= k"};
  }
  return plan;
}

std::vector<double> PhaseBinProbabilities(int num_phases) {
  std::vector<double> p(num_phases + 1);
  for (int l = 0; l <= num_phases; ++l) {
    p[l] = std::ldexp(1.0, std::max(1, l) - num_phases - 1);
  }
  return p;
}

std::vector<int> SamplePhaseSizes(int n, int num_phases, Rng& rng) {
  if (num_phases < 1 || num_phases > 62) {
    throw PreconditionError("phase count must be in [1, 62]");
  }
  // With u uniform on [0, 2^L), bit_width(u) = l has probability 2^-L for
  // l = 0 and 2^(l-1-L) otherwise.
  std::vector<int> z(num_phases + 1, 0);
  const std::uint64_t range = std::uint64_t{1} << num_phases;
  for (int i = 0; i < n; ++i) ++z[std::bit_width(rng.UniformInt(range))];
  return z;
}

}  // namespace ksec
