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

#include "ksec/ground_set.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ksec/errors.h"

namespace ksec {

GroundSet::GroundSet(std::vector<double> weights) : weights_(std::move(weights)) {
  for (size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || weights_[i] <= 0.0) {
      throw PreconditionError("weight of element " + std::to_string(i) +
                              " must be finite and strictly positive");
    }
  }
  order_.resize(weights_.size());
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [this](Element a, Element b) {
    return weights_[a] > weights_[b];
  });
  position_.resize(weights_.size());
  for (size_t p = 0; p < order_.size(); ++p) position_[order_[p]] = static_cast<int>(p);
}

double GroundSet::Weight(std::span<const Element> s) const {
  double total = 0.0;
  for (Element e : s) total += weights_[e];
  return total;
}

void GroundSet::SortByWeight(ElementSet& s) const {
  std::sort(s.begin(), s.end(),
            [this](Element a, Element b) { return position_[a] < position_[b]; });
}

bool GroundSet::HasDistinctWeights() const {
  for (size_t p = 1; p < order_.size(); ++p) {
    if (weights_[order_[p - 1]] == weights_[order_[p]]) return false;
  }
  return true;
}

void GroundSet::CheckElement(Element e) const {
  if (e < 0 || e >= size()) {
    throw std::out_of_range("element " + std::to_string(e) +
                            " outside ground set of size " + std::to_string(size()));
  }
}

void GroundSet::CheckElements(std::span<const Element> s) const {
  for (Element e : s) CheckElement(e);
}

}  // namespace ksec
