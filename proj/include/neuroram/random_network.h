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

#ifndef NEURORAM_RANDOM_NETWORK_H_
#define NEURORAM_RANDOM_NETWORK_H_

#include <cstdint>
#include <vector>

#include "neuroram/bits.h"
#include "neuroram/network.h"
#include "neuroram/rational.h"
#include "neuroram/vc.h"

namespace neuroram {

struct RandomNetworkOptions {
  int inputs = 3;
  int auxiliary = 3;
  Rational temperature{1, 4};
  double edge_probability = 0.6;
  int max_weight = 3;  // synapse magnitudes are drawn from 1..max_weight
  int max_bias = 3;    // biases are drawn from 0..max_bias
};

// Small recurrent test network: the given inputs, auxiliary neurons named
// "a[i]" with random polarity, and one excitatory output "z". Every
// (pre, post) pair with a non-input post, self-loops included, is a synapse
// with probability edge_probability; its sign follows pre's polarity.
// The result always passes Validate. Deterministic in seed.
Network RandomNetwork(const RandomNetworkOptions& options, std::uint64_t seed);

// Variable-threshold architecture with d inputs and m gates. Gate i reads
// every input and every earlier gate with integer weights in [-3, 3]; the
// last gate is the output.
VarThresholdArchitecture RandomArchitecture(int d, int m, std::uint64_t seed);

// z distinct points of {0,1}^d drawn uniformly. Throws std::invalid_argument
// if z > 2^d.
std::vector<Bits> RandomSamples(int d, int z, std::uint64_t seed);

// Uniform bit string of the given length.
Bits RandomBits(int length, std::uint64_t seed);

}  // namespace neuroram

#endif  // NEURORAM_RANDOM_NETWORK_H_
