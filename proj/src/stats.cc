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

#include "ksec/stats.h"

#include <cmath>
#include <vector>

#include <boost/math/distributions/beta.hpp>

#include "ksec/errors.h"

namespace ksec {

double PairwiseSum(std::span<const double> x) {
  constexpr size_t kBlock = 8;
  if (x.size() <= kBlock) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const size_t half = x.size() / 2;
  return PairwiseSum(x.first(half)) + PairwiseSum(x.subspan(half));
}

MeanSe MeanAndSe(std::span<const double> x) {
  MeanSe out;
  if (x.empty()) return out;
  const double count = static_cast<double>(x.size());
  out.mean = PairwiseSum(x) / count;
  if (x.size() < 2) return out;
  std::vector<double> dev(x.size());
  for (size_t i = 0; i < x.size(); ++i) dev[i] = (x[i] - out.mean) * (x[i] - out.mean);
  out.se = std::sqrt(PairwiseSum(dev) / (count - 1.0) / count);
  return out;
}

std::pair<double, double> ClopperPearson(std::int64_t successes, std::int64_t trials,
                                         double level) {
  if (trials < 1 || successes < 0 || successes > trials || !(level > 0.0 && level < 1.0)) {
    throw PreconditionError("Clopper-Pearson needs 0 <= successes <= trials, trials >= 1");
  }
  const double alpha = 1.0 - level;
  const double x = static_cast<double>(successes);
  const double n = static_cast<double>(trials);
  double lo = 0.0, hi = 1.0;
  if (successes > 0) {
    lo = boost::math::quantile(boost::math::beta_distribution<double>(x, n - x + 1.0), alpha / 2);
  }
  if (successes < trials) {
    hi = boost::math::quantile(boost::math::beta_distribution<double>(x + 1.0, n - x),
                               1.0 - alpha / 2);
  }
  return {lo, hi};
}

}  // namespace ksec
