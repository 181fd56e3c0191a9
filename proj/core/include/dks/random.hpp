// Copyright 2026 The dks Authors
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

#ifndef DKS_RANDOM_HPP_
#define DKS_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace dks {

// All randomness flows through mt19937_64, whose output sequence is fixed by
// the standard. The helpers below avoid std:: distributions so that streams
// are reproducible across standard library implementations.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53 random bits.
inline double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound), bound > 0. Modulo with rejection of the
// incomplete top block.
inline std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  const std::uint64_t reject_from = Rng::max() - Rng::max() % bound;
  std::uint64_t r = rng();
  while (r >= reject_from) r = rng();
  return r % bound;
}

// Independent seed for sub-stream `stream` of `seed` (splitmix64 finalizer).
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace dks

#endif  // DKS_RANDOM_HPP_
