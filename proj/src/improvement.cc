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

#include "ksec/improvement.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "ksec/errors.h"

namespace ksec {

ImprovementTester::ImprovementTester(const GroundSet& ground, const UnionMatroid& u,
                                     std::span<const Element> sample)
    : ground_(ground), union_(u), sample_(sample.begin(), sample.end()),
      in_sample_(ground.size(), 0) {
  if (ground.size() != u.size()) {
    throw PreconditionError("ground set and union sizes differ");
  }
  ground.CheckElements(sample_);
  for (Element e : sample_) in_sample_[e] = 1;
  ground.SortByWeight(sample_);
}

std::vector<char> ImprovementTester::Evaluate(std::span<const Element> queries) const {
  std::vector<int> idx(queries.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (Element q : queries) {
    ground_.CheckElement(q);
    if (in_sample_[q]) {
      throw PreconditionError("query " + std::to_string(q) + " lies in the sample");
    }
  }
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return ground_.position(queries[a]) < ground_.position(queries[b]);
  });

  std::vector<char> flags(queries.size(), 0);
  PartitionCertificate prefix = union_.NewCertificate();
  size_t next = 0;
  for (int q : idx) {
    const Element i = queries[q];
    while (next < sample_.size() && ground_.Heavier(sample_[next], i)) {
      union_.Insert(prefix, sample_[next]);
      ++next;
    }
    flags[q] = union_.CanInsert(prefix, i);
  }
  return flags;
}

ElementSet ImprovementTester::Basis() const {
  PartitionCertificate cert = union_.NewCertificate();
  ElementSet out;
  for (Element e : sample_) {
    if (union_.Insert(cert, e)) out.push_back(e);
  }
  return out;
}

}  // namespace ksec
