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

#include "ksec/matroid_ops.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "ksec/errors.h"

namespace ksec {
namespace {

std::string SetToString(const ElementSet& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace

ElementSet MaxWeightBasis(const Matroid& m, const GroundSet& ground,
                          std::span<const Element> s) {
  ground.CheckElements(s);
  ElementSet sorted(s.begin(), s.end());
  ground.SortByWeight(sorted);
  ElementSet basis;
  for (Element e : sorted) {
    basis.push_back(e);
    if (!m.IsIndependent(basis)) basis.pop_back();
  }
  return basis;
}

bool Improves(const Matroid& m, const GroundSet& ground, std::span<const Element> s,
              Element i) {
  ground.CheckElement(i);
  ground.CheckElements(s);
  ElementSet heavier;
  for (Element j : s) {
    if (j == i) throw PreconditionError("improves: element already in the set");
    if (ground.Heavier(j, i)) heavier.push_back(j);
  }
  // i is outside span(heavier) iff a basis of heavier stays independent with i.
  ElementSet basis;
  for (Element j : heavier) {
    basis.push_back(j);
    if (!m.IsIndependent(basis)) basis.pop_back();
  }
  basis.push_back(i);
  return m.IsIndependent(basis);
}

FlatList EnumerateFlats(const Matroid& m) {
  if (m.size() > kMaxFlatEnumeration) {
    throw EnumerationLimitError("flat enumeration needs n <= " +
                                std::to_string(kMaxFlatEnumeration));
  }
  // Every flat is the span of one of its bases, so closing the independent
  // sets reaches all of them.
  std::unordered_set<Mask> seen;
  std::vector<std::pair<int, Mask>> found;
  const Mask limit = Mask{1} << m.size();
  for (Mask s = 0; s < limit; ++s) {
    const ElementSet set = FromMask(s);
    if (!m.IsIndependent(set)) continue;
    const Mask closure = ToMask(m.Span(set));
    if (seen.insert(closure).second) {
      found.emplace_back(std::popcount(s), closure);
    }
  }
  std::sort(found.begin(), found.end());
  FlatList out;
  for (const auto& [rank, mask] : found) {
    out.flats.push_back(FromMask(mask));
    out.ranks.push_back(rank);
  }
  return out;
}

std::string AxiomReport::ToString() const {
  if (ok) return "ok";
  return violation + " violated: S=" + SetToString(s) + " T=" + SetToString(t);
}

AxiomReport CheckAxioms(const Matroid& m) {
  if (m.size() > kMaxAxiomCheck) {
    throw EnumerationLimitError("axiom check needs n <= " + std::to_string(kMaxAxiomCheck));
  }
  const Mask limit = Mask{1} << m.size();
  std::vector<char> indep(limit);
  for (Mask s = 0; s < limit; ++s) indep[s] = m.IsIndependent(FromMask(s));

  AxiomReport report;
  if (!indep[0]) {
    report.ok = false;
    report.violation = "empty-set";
    return report;
  }
  // Removing one element at a time suffices for downward closure.
  for (Mask t = 0; t < limit; ++t) {
    if (!indep[t]) continue;
    for (Mask rest = t; rest != 0; rest &= rest - 1) {
      const Mask s = t & ~(rest & -rest);
      if (!indep[s]) {
        report.ok = false;
        report.violation = "downward-closure";
        report.s = FromMask(s);
        report.t = FromMask(t);
        return report;
      }
    }
  }
  for (Mask s = 0; s < limit; ++s) {
    if (!indep[s]) continue;
    for (Mask t = 0; t < limit; ++t) {
      if (!indep[t] || std::popcount(s) >= std::popcount(t)) continue;
      bool extended = false;
      for (Mask rest = t & ~s; rest != 0 && !extended; rest &= rest - 1) {
        extended = indep[s | (rest & -rest)];
      }
      if (!extended) {
        report.ok = false;
        report.violation = "augmentation";
        report.s = FromMask(s);
        report.t = FromMask(t);
        return report;
      }
    }
  }
  return report;
}

int ParallelClassCount(const Matroid& m) {
  const int n = m.size();
  // Parallelism is an equivalence on a loopless matroid, so comparing against
  // one representative per class is enough.
  std::vector<Element> reps;
  int count = 0;
  for (Element i = 0; i < n; ++i) {
    bool merged = false;
    for (Element r : reps) {
      const Element pair[2] = {r, i};
      if (m.Rank(pair) == 1) {
        merged = true;
        break;
      }
    }
    if (!merged) {
      reps.push_back(i);
      ++count;
    }
  }
  return count;
}

}  // namespace ksec
