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

#ifndef KSEC_PRIME_FIELD_H_
#define KSEC_PRIME_FIELD_H_

#include <cstdint>
#include <vector>

namespace ksec {

// Arithmetic in GF(p) for a prime p <= 257. Values are kept in [0, p).
class PrimeField {
 public:
  static constexpr int kMaxPrime = 257;

  // Throws PreconditionError unless p is a prime in [2, kMaxPrime].
  explicit PrimeField(int p);

  int prime() const { return p_; }
  int Reduce(long long v) const {
    long long r = v % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int Add(int a, int b) const { return (a + b) % p_; }
  int Sub(int a, int b) const { return (a - b + p_) % p_; }
  int Mul(int a, int b) const { return (a * b) % p_; }
  int Inverse(int a) const { return inverse_[a]; }

 private:
  int p_;
  std::vector<int> inverse_;
};

bool IsPrime(int p);

// Dense matrix over GF(p), row-major.
using FieldMatrix = std::vector<std::vector<int>>;

struct Echelon {
  FieldMatrix reduced;            // reduced row echelon form
  std::vector<int> pivot_columns;  // pivot_columns[r] = pivot of row r
  int rank() const { return static_cast<int>(pivot_columns.size()); }
};

// Gauss-Jordan elimination over GF(p); rows past rank() are zero.
Echelon RowReduce(FieldMatrix a, const PrimeField& field);

}  // namespace ksec

#endif  // KSEC_PRIME_FIELD_H_
