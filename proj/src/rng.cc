// Copyright 2026 The neuroram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "neuroram/rng.h"

namespace neuroram {
namespace {

// SplitMix64 finalizer.
constexpr std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t CounterRng::Bits64(RngStream stream, std::uint64_t a,
                                 std::uint64_t b) const {
  std::uint64_t h = Mix(seed_ ^ 0x6a09e667f3bcc908ULL);
  h = Mix(h ^ static_cast<std::uint64_t>(stream));
  h = Mix(h ^ a);
  return Mix(h ^ b);
}

double CounterRng::Uniform(RngStream stream, std::uint64_t a,
                           std::uint64_t b) const {
  // Midpoint of one of 2^53 equal cells: never 0, never 1.
  return (static_cast<double>(Bits64(stream, a, b) >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t TrialSeed(std::uint64_t root_seed, std::uint64_t trial) {
  return CounterRng(root_seed).Bits64(RngStream::kTrialSeed, trial, 0);
}

}  // namespace neuroram
