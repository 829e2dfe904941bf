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

#ifndef KSEC_LEMMAS_H_
#define KSEC_LEMMAS_H_

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ksec/ground_set.h"
#include "ksec/matroid.h"

namespace ksec {

inline constexpr int kMaxExactLemmaSize = 14;

struct LemmaParams {
  double p = 0.5;
  int r = 1;
  int k = 1;
  int trials = 1000;
  std::uint64_t seed = 1;
  // eps(x) = c * sqrt(log2(n) / x).
  double c = 10.0;
  // Enumerate all 3^n outcomes instead of sampling; needs n <= 14.
  bool exact = false;
  int jobs = 1;
};

// With X_i ~ Ber(2p) and Y_i ~ Ber(1/2), S = {X = 1, Y = 1} and
// T = {X = 1, Y = 0}: T* are the members of T that improve S w.r.t. M^r,
// S* = OPT(S, M^r) and S+ = S ∩ OPT(N, M^k).
struct LemmaEstimate {
  double p = 0.0;
  int r = 0;
  // Sampled trials, or 3^n in exact mode.
  std::int64_t trials = 0;
  std::string mode;  // "exact", "montecarlo" or "error"
  // Pr[phi(T*) >= (1 + eps(r)) r] and Pr[phi(S+) >= (1 + eps(pk)) pk] with
  // 95% Clopper-Pearson intervals (degenerate in exact mode).
  double tail_freq = 0.0, ci_lo = 0.0, ci_hi = 0.0;
  double tail_freq_splus = 0.0, ci_lo_splus = 0.0, ci_hi_splus = 0.0;
  double mean_wT = 0.0, mean_wS = 0.0, mean_wSplus = 0.0;
  double se_wT = 0.0, se_wS = 0.0, se_wSplus = 0.0;
  double threshold_t = 0.0, threshold_splus = 0.0;
  // Exact mode: Pr[i in T*] == Pr[i in S*] for every i, compared as integer
  // outcome counts per |X|.
  bool exact_equal = false;
  std::string status = "ok";
  nlohmann::json ToJson() const;
};

// Throws PreconditionError unless p is in [eps(k), 1/2] and
// r >= (1 + eps(pk)) pk, or if exact mode is asked for n > 14.
LemmaEstimate EstimateLemmas(const GroundSet& ground, const std::shared_ptr<const Matroid>& m,
                             const LemmaParams& params);

// Rows with mode "error" carry the message in status and leave the numeric
// columns empty.
void WriteLemmaCsv(std::ostream& out, const std::vector<LemmaEstimate>& rows,
                   const nlohmann::json& config);

}  // namespace ksec

#endif  // KSEC_LEMMAS_H_
