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

#ifndef KSEC_RNG_H_
#define KSEC_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace ksec {

// SplitMix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded stream with platform-independent sampling helpers. The standard
// distributions are implementation-defined, so draws go through the raw
// 64-bit engine output only.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Stream for (master seed, stream, substream), e.g. (seed, trial, algorithm).
  static Rng ForStream(std::uint64_t master, std::uint64_t stream, std::uint64_t substream = 0) {
    return Rng(SplitMix64(SplitMix64(SplitMix64(master) ^ stream) ^ substream));
  }

  std::uint64_t Next() { return engine_(); }

  // Uniform on [0, bound), bound >= 1 (Lemire's multiply-shift with rejection).
  std::uint64_t UniformInt(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(Next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(Next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }
  // Uniform on (0, 1].
  double UniformOpenClosed() { return static_cast<double>((Next() >> 11) + 1) * 0x1.0p-53; }

  bool Bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return Uniform01() < p;
  }

  // Uniform random permutation of 0..n-1 (Fisher-Yates).
  std::vector<int> Permutation(int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = i;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(UniformInt(static_cast<std::uint64_t>(i) + 1));
      std::swap(out[i], out[j]);
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ksec

#endif  // KSEC_RNG_H_
