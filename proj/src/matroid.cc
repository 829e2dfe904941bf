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

#include "ksec/matroid.h"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "ksec/errors.h"

namespace ksec {

bool Matroid::IsIndependent(std::span<const Element> s) const {
  CheckElements(s);
  return IndependentImpl(s);
}

int Matroid::Rank(std::span<const Element> s) const {
  CheckElements(s);
  return RankImpl(s);
}

ElementSet Matroid::Span(std::span<const Element> s) const {
  CheckElements(s);
  return SpanImpl(s);
}

std::optional<ElementSet> Matroid::Circuit(std::span<const Element> base,
                                           Element x) const {
  CheckElements(base);
  CheckElement(x);
  return CircuitImpl(base, x);
}

int Matroid::FullRank() const {
  ElementSet all = AllElements(n_);
  return RankImpl(all);
}

int Matroid::RankImpl(std::span<const Element> s) const {
  ElementSet basis;
  basis.reserve(s.size());
  for (Element e : s) {
    basis.push_back(e);
    if (!IndependentImpl(basis)) basis.pop_back();
  }
  return static_cast<int>(basis.size());
}

ElementSet Matroid::SpanImpl(std::span<const Element> s) const {
  // Reduce to a basis of s; i is spanned iff basis + i is dependent.
  ElementSet basis;
  for (Element e : s) {
    basis.push_back(e);
    if (!IndependentImpl(basis)) basis.pop_back();
  }
  std::vector<char> in_s(n_, 0);
  for (Element e : s) in_s[e] = 1;
  ElementSet result;
  for (Element i = 0; i < n_; ++i) {
    if (in_s[i]) {
      result.push_back(i);
      continue;
    }
    basis.push_back(i);
    if (!IndependentImpl(basis)) result.push_back(i);
    basis.pop_back();
  }
  return result;
}

std::optional<ElementSet> Matroid::CircuitImpl(std::span<const Element> base,
                                               Element x) const {
  ElementSet trial(base.begin(), base.end());
  trial.push_back(x);
  if (IndependentImpl(trial)) return std::nullopt;
  // y lies on the circuit iff base - y + x is independent.
  ElementSet circuit;
  for (size_t j = 0; j < base.size(); ++j) {
    std::swap(trial[j], trial.back());
    Element removed = trial.back();
    trial.pop_back();
    if (IndependentImpl(trial)) circuit.push_back(removed);
    trial.push_back(removed);
    std::swap(trial[j], trial.back());
  }
  return circuit;
}

void Matroid::CheckElement(Element e) const {
  if (e < 0 || e >= n_) {
    throw std::out_of_range("element " + std::to_string(e) +
                            " outside ground set of size " + std::to_string(n_));
  }
}

void Matroid::CheckElements(std::span<const Element> s) const {
  for (Element e : s) CheckElement(e);
}

void Matroid::RejectLoops() const {
  for (Element e = 0; e < n_; ++e) {
    const Element single[1] = {e};
    if (!IndependentImpl(single)) {
      throw LoopError(std::string(kind()) + " matroid has a loop at element " +
                      std::to_string(e));
    }
  }
}

Mask ToMask(std::span<const Element> s) {
  Mask m = 0;
  for (Element e : s) m |= Mask{1} << e;
  return m;
}

ElementSet FromMask(Mask m) {
  ElementSet s;
  s.reserve(std::popcount(m));
  while (m != 0) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

ElementSet AllElements(int n) {
  ElementSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace ksec
