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

#ifndef KSEC_STATS_H_
#define KSEC_STATS_H_

#include <cstdint>
#include <span>
#include <utility>

namespace ksec {

// Pairwise (cascade) summation; the result depends only on the input order.
double PairwiseSum(std::span<const double> x);

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;  // sample sd / sqrt(count); 0 for fewer than two values
};
MeanSe MeanAndSe(std::span<const double> x);

// Exact two-sided Clopper-Pearson interval for `successes` out of `trials`
// at the given confidence level.
std::pair<double, double> ClopperPearson(std::int64_t successes, std::int64_t trials,
                                         double level = 0.95);

}  // namespace ksec

#endif  // KSEC_STATS_H_
