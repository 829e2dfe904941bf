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

#include "ksec/secretary.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ksec/covering.h"
#include "ksec/errors.h"
#include "ksec/improvement.h"

namespace ksec {
namespace {

void Finish(const GroundSet& ground, TrialRecord& rec, std::optional<double> opt_weight,
            const UnionMatroid* feasibility) {
  rec.weight = ground.Weight(rec.accepted);
  if (opt_weight) {
    rec.opt_weight = *opt_weight;
  } else if (feasibility != nullptr) {
    rec.opt_weight = OfflineOpt(ground, *feasibility).weight;
  }
}

}  // namespace

nlohmann::json PhaseTrace::ToJson() const {
  return {{"capacity", capacity}, {"acceptance_cap", acceptance_cap},
          {"sample", sample},     {"arrivals", arrivals},
          {"eligible", eligible}, {"improving", improving},
          {"accepted", accepted}};
}

nlohmann::json TrialRecord::ToJson() const {
  nlohmann::json out = {{"algorithm", algorithm},
                        {"order", order},
                        {"accepted", accepted},
                        {"weight", weight},
                        {"opt_weight", opt_weight},
                        {"ratio", ratio()},
                        {"covering_number", covering_number}};
  if (!phase_sizes.empty()) {
    out["phase_sizes"] = phase_sizes;
    out["phase_accepted"] = phase_accepted;
  }
  if (!trace.empty()) {
    nlohmann::json phases = nlohmann::json::array();
    for (const PhaseTrace& t : trace) phases.push_back(t.ToJson());
    out["trace"] = phases;
  }
  return out;
}

OptResult OfflineOpt(const GroundSet& ground, const UnionMatroid& u) {
  OptResult out;
  out.basis = u.MaxWeightBasis(ground, ground.order());
  out.weight = ground.Weight(out.basis);
  return out;
}

void CheckOrder(std::span<const int> order, int n) {
  if (static_cast<int>(order.size()) != n) {
    throw PreconditionError("arrival order has " + std::to_string(order.size()) +
                            " entries for " + std::to_string(n) + " elements");
  }
  std::vector<char> seen(n, 0);
  for (int e : order) {
    if (e < 0 || e >= n || seen[e]) {
      throw PreconditionError("arrival order is not a permutation");
    }
    seen[e] = 1;
  }
}

TrialRecord RunAlgorithm1(const GroundSet& ground, const std::shared_ptr<const Matroid>& m, int k,
                          std::span<const int> order, Rng& rng, const PhasePlan& plan,
                          const RunOptions& options) {
  const int n = ground.size();
  if (m->size() != n) throw PreconditionError("matroid and ground set sizes differ");
  if (plan.n != n || plan.k != k) {
    throw PreconditionError("phase plan was built for (n, k) = (" + std::to_string(plan.n) +
                            ", " + std::to_string(plan.k) + ")");
  }
  CheckOrder(order, n);

  TrialRecord rec;
  rec.algorithm = "alg1";
  rec.order.assign(order.begin(), order.end());
  rec.phase_sizes = SamplePhaseSizes(plan, rng);

  int observed = rec.phase_sizes[0];
  for (int l = 1; l <= plan.num_phases; ++l) {
    const int r = plan.capacities[l - 1];
    const int cap = plan.acceptance_caps[l - 1];
    const double rate = plan.subsample_rates[l - 1];

    ElementSet sample;
    for (int t = 0; t < observed; ++t) {
      if (rng.Bernoulli(rate)) sample.push_back(order[t]);
    }
    const auto arrivals = order.subspan(observed, rec.phase_sizes[l]);
    ElementSet eligible;
    for (int i : arrivals) {
      if (rng.Bernoulli(rate)) eligible.push_back(i);
    }
    observed += rec.phase_sizes[l];

    const UnionMatroid sample_union = UnionMatroid::Power(m, r);
    const std::vector<char> improves =
        ImprovementTester(ground, sample_union, sample).Evaluate(eligible);

    const UnionMatroid phase_union = UnionMatroid::Power(m, cap);
    PartitionCertificate cert = phase_union.NewCertificate();
    ElementSet accepted, improving;
    for (size_t q = 0; q < eligible.size(); ++q) {
      if (!improves[q]) continue;
      improving.push_back(eligible[q]);
      // Outside the span of ALG_l iff it can join the certificate.
      if (phase_union.Insert(cert, eligible[q])) accepted.push_back(eligible[q]);
    }

    if (options.trace) {
      // phi is monotone, so checking the finished phase covers every prefix.
      const int phi = CoveringNumber(m, accepted).value;
      if (phi > cap) {
        throw InvariantViolation("phase " + std::to_string(l) + " reached phi = " +
                                 std::to_string(phi) + " above cap " + std::to_string(cap));
      }
      rec.trace.push_back({r, cap, std::move(sample),
                           ElementSet(arrivals.begin(), arrivals.end()), std::move(eligible),
                           std::move(improving), accepted});
    }
    rec.accepted.insert(rec.accepted.end(), accepted.begin(), accepted.end());
    rec.phase_accepted.push_back(std::move(accepted));
  }

  if (options.check_feasibility) {
    rec.covering_number = CoveringNumber(m, rec.accepted).value;
    if (rec.covering_number > k) {
      throw InvariantViolation("accepted set has covering number " +
                               std::to_string(rec.covering_number) + " > k = " +
                               std::to_string(k));
    }
  }
  if (options.opt_weight) {
    Finish(ground, rec, options.opt_weight, nullptr);
  } else {
    const UnionMatroid full = UnionMatroid::Power(m, k);
    Finish(ground, rec, std::nullopt, &full);
  }
  return rec;
}

TrialRecord RunDynkin(const GroundSet& ground, std::span<const int> order) {
  const int n = ground.size();
  if (n < 1) throw PreconditionError("Dynkin's rule needs n >= 1");
  CheckOrder(order, n);
  TrialRecord rec;
  rec.algorithm = "dynkin";
  rec.order.assign(order.begin(), order.end());
  const int window = static_cast<int>(std::floor(n / std::numbers::e));
  int best = -1;
  for (int t = 0; t < window; ++t) {
    if (best < 0 || ground.Heavier(order[t], best)) best = order[t];
  }
  for (int t = window; t < n; ++t) {
    if (best < 0 || ground.Heavier(order[t], best)) {
      rec.accepted.push_back(order[t]);
      break;
    }
  }
  rec.weight = ground.Weight(rec.accepted);
  return rec;
}

double DefaultNaiveEpsilon(int n, int k) {
  if (n < 2 || k < 1) return 0.5;
  const double eps = std::sqrt(std::log2(static_cast<double>(n))) / std::cbrt(k);
  return std::clamp(eps, 1.0 / n, 0.5);
}

TrialRecord RunNaiveThreshold(const GroundSet& ground, const UnionMatroid& feasibility, int k,
                              double eps, std::span<const int> order) {
  const int n = ground.size();
  if (!(eps > 0.0 && eps < 1.0)) throw PreconditionError("naive threshold needs 0 < eps < 1");
  if (k < 1) throw PreconditionError("naive threshold needs k >= 1");
  CheckOrder(order, n);
  TrialRecord rec;
  rec.algorithm = "naive";
  rec.order.assign(order.begin(), order.end());

  const int window = std::min(n, static_cast<int>(std::ceil(eps * n)));
  const int rank = static_cast<int>(std::ceil(eps * k));
  std::optional<Element> threshold;
  if (window >= rank && rank >= 1) {
    ElementSet seen(order.begin(), order.begin() + window);
    std::nth_element(seen.begin(), seen.begin() + (rank - 1), seen.end(),
                     [&](Element a, Element b) { return ground.Heavier(a, b); });
    threshold = seen[rank - 1];
  }
  PartitionCertificate cert = feasibility.NewCertificate();
  for (int t = window; t < n && static_cast<int>(rec.accepted.size()) < k; ++t) {
    const Element i = order[t];
    if (threshold && !ground.Heavier(i, *threshold)) continue;
    if (feasibility.Insert(cert, i)) rec.accepted.push_back(i);
  }
  rec.weight = ground.Weight(rec.accepted);
  return rec;
}

TrialRecord RunGreedyBaseline(const GroundSet& ground, const UnionMatroid& feasibility,
                              std::span<const int> order) {
  const int n = ground.size();
  CheckOrder(order, n);
  TrialRecord rec;
  rec.algorithm = "greedy";
  rec.order.assign(order.begin(), order.end());
  const int window = n / 2;
  const ImprovementTester tester(ground, feasibility, order.first(window));
  const auto rest = order.subspan(window);
  const std::vector<char> improves = tester.Evaluate(rest);
  PartitionCertificate cert = feasibility.NewCertificate();
  for (size_t q = 0; q < rest.size(); ++q) {
    if (improves[q] && feasibility.Insert(cert, rest[q])) rec.accepted.push_back(rest[q]);
  }
  rec.weight = ground.Weight(rec.accepted);
  return rec;
}

TrialRecord RunAcceptAll(const GroundSet& ground, const UnionMatroid& feasibility,
                         std::span<const int> order) {
  CheckOrder(order, ground.size());
  TrialRecord rec;
  rec.algorithm = "acceptall";
  rec.order.assign(order.begin(), order.end());
  PartitionCertificate cert = feasibility.NewCertificate();
  for (int i : order) {
    if (feasibility.Insert(cert, i)) rec.accepted.push_back(i);
  }
  rec.weight = ground.Weight(rec.accepted);
  return rec;
}

}  // namespace ksec
