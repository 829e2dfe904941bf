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

#include "ksec/prime_field.h"

#include <string>
#include <utility>

#include "ksec/errors.h"

namespace ksec {

bool IsPrime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (p > kMaxPrime || !IsPrime(p)) {
    throw PreconditionError("field size must be a prime <= 257, got " +
                            std::to_string(p));
  }
  inverse_.assign(p, 0);
  for (int a = 1; a < p; ++a) {
    // Fermat: a^(p-2).
    int result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    inverse_[a] = result;
  }
}

Echelon RowReduce(FieldMatrix a, const PrimeField& field) {
  Echelon out;
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    const int inv = field.Inverse(a[r][c]);
    for (int j = c; j < cols; ++j) a[r][j] = field.Mul(a[r][j], inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const int f = a[i][c];
      for (int j = c; j < cols; ++j) {
        a[i][j] = field.Sub(a[i][j], field.Mul(f, a[r][j]));
      }
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

}  // namespace ksec
