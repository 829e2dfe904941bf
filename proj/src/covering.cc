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

#include "ksec/covering.h"

#include <algorithm>
#include <bit>
#include <string>

#include "ksec/errors.h"
#include "ksec/matroid_ops.h"

namespace ksec {
namespace {

int CeilDiv(int a, int b) { return (a + b - 1) / b; }

void RequireLoopFree(const Matroid& m, std::span<const Element> s) {
  for (Element e : s) {
    const Element single[1] = {e};
    if (!m.IsIndependent(single)) {
      throw LoopError("element " + std::to_string(e) +
                      " is a loop; covering number undefined");
    }
  }
}

void RequireSmall(std::span<const Element> s, const char* what) {
  if (s.size() > static_cast<size_t>(kMaxFlatEnumeration)) {
    throw EnumerationLimitError(std::string(what) + " needs at most " +
                                std::to_string(kMaxFlatEnumeration) + " elements");
  }
}

}  // namespace

CoveringResult CoveringNumber(const std::shared_ptr<const Matroid>& m,
                              std::span<const Element> s, UnionMatroid::Options options) {
  RequireLoopFree(*m, s);
  CoveringResult out;
  if (s.empty()) {
    out.certificate = PartitionCertificate(m->size(), 0);
    return out;
  }
  const BlockStructure* blocks = options.block_fast_path ? m->blocks() : nullptr;
  if (blocks != nullptr) {
    std::vector<int> count(blocks->caps.size(), 0);
    for (Element e : s) ++count[blocks->block_of[e]];
    for (size_t b = 0; b < count.size(); ++b) {
      if (count[b] > 0) out.value = std::max(out.value, CeilDiv(count[b], blocks->caps[b]));
    }
    const UnionMatroid u = UnionMatroid::Power(m, out.value, options);
    out.certificate = u.NewCertificate();
    for (Element e : s) {
      if (!u.Insert(out.certificate, e)) {
        throw InvariantViolation("closed-form covering number failed to certify");
      }
    }
    return out;
  }

  // Inserting into r parts fails only if the covered prefix plus e needs more
  // than r parts, so the final r is the covering number of s.
  int r = 1;
  UnionMatroid u = UnionMatroid::Power(m, r, options);
  PartitionCertificate cert = u.NewCertificate();
  for (Element e : s) {
    if (u.Insert(cert, e)) continue;
    ++r;
    u = UnionMatroid::Power(m, r, options);
    cert.AddPart();
    if (!u.Insert(cert, e)) {
      throw InvariantViolation("insertion failed with an empty part available");
    }
  }
  out.value = r;
  out.certificate = std::move(cert);
  return out;
}

WitnessedValue NashWilliamsValue(const Matroid& m, std::span<const Element> s) {
  RequireSmall(s, "Nash-Williams enumeration");
  if (s.empty()) throw PreconditionError("Nash-Williams value needs a nonempty set");
  RequireLoopFree(m, s);
  WitnessedValue best;
  const Mask limit = Mask{1} << s.size();
  ElementSet t;
  for (Mask sub = 1; sub < limit; ++sub) {
    t.clear();
    for (Mask rest = sub; rest != 0; rest &= rest - 1) t.push_back(s[std::countr_zero(rest)]);
    const int value = CeilDiv(static_cast<int>(t.size()), m.Rank(t));
    if (value > best.value) {
      best.value = value;
      best.witness = t;
      std::sort(best.witness.begin(), best.witness.end());
    }
  }
  return best;
}

WitnessedValue FlatsCoverBound(const Matroid& m, std::span<const Element> s) {
  if (s.empty()) throw PreconditionError("flats cover bound needs a nonempty set");
  RequireLoopFree(m, s);
  const FlatList flats = EnumerateFlats(m);
  const Mask in_s = ToMask(s);
  WitnessedValue best;
  for (size_t f = 0; f < flats.flats.size(); ++f) {
    if (flats.ranks[f] < 1) continue;
    const int hit = std::popcount(ToMask(flats.flats[f]) & in_s);
    const int value = CeilDiv(hit, flats.ranks[f]);
    // Flats come in increasing rank; ties go to the larger flat.
    if (value > 0 && value >= best.value) {
      best.value = value;
      best.witness = flats.flats[f];
    }
  }
  return best;
}

int UnionRankMinFormula(const UnionMatroid& u, std::span<const Element> s) {
  RequireSmall(s, "union rank min-formula");
  const Mask limit = Mask{1} << s.size();
  int best = static_cast<int>(s.size());
  ElementSet t;
  for (Mask sub = 0; sub < limit; ++sub) {
    t.clear();
    for (Mask rest = sub; rest != 0; rest &= rest - 1) t.push_back(s[std::countr_zero(rest)]);
    int value = static_cast<int>(s.size() - t.size());
    for (int j = 0; j < u.fold() && value < best; ++j) value += u.member(j).Rank(t);
    best = std::min(best, value);
  }
  return best;
}

}  // namespace ksec
