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

#ifndef NEURORAM_RNG_H_
#define NEURORAM_RNG_H_

#include <cstdint>

namespace neuroram {

// Stream tags keep the draws of different consumers independent.
enum class RngStream : std::uint64_t {
  kFiring = 1,
  kLogisticBias = 2,
  kTrialSeed = 3,
};

// Counter-based generator: every draw is a pure function of
// (seed, stream, a, b), so a simulation can address the uniform for
// (round, neuron) directly without carrying generator state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t Bits64(RngStream stream, std::uint64_t a,
                       std::uint64_t b) const;

  // Uniform in the open interval (0, 1).
  double Uniform(RngStream stream, std::uint64_t a, std::uint64_t b) const;

 private:
  std::uint64_t seed_;
};

// Seed of the trial-th independent repetition derived from a root seed.
std::uint64_t TrialSeed(std::uint64_t root_seed, std::uint64_t trial);

}  // namespace neuroram

#endif  // NEURORAM_RNG_H_
