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

#include "neuroram/random_network.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace neuroram {

Network RandomNetwork(const RandomNetworkOptions& options,
                      std::uint64_t seed) {
  if (options.inputs < 0 || options.auxiliary < 0 || options.max_weight < 1 ||
      options.max_bias < 0 || options.edge_probability < 0 ||
      options.edge_probability > 1) {
    throw std::invalid_argument("invalid random network options");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution edge(options.edge_probability);
  std::uniform_int_distribution<int> weight(1, options.max_weight);
  std::uniform_int_distribution<int> bias(0, options.max_bias);

  NetworkBuilder builder(options.temperature);
  std::vector<NeuronId> all;
  for (int i = 0; i < options.inputs; ++i) {
    all.push_back(builder.AddInput("x[" + std::to_string(i) + "]"));
  }
  std::vector<NeuronId> targets;
  for (int i = 0; i < options.auxiliary; ++i) {
    const Polarity polarity =
        coin(rng) ? Polarity::kInhibitory : Polarity::kExcitatory;
    targets.push_back(builder.AddNeuron("a[" + std::to_string(i) + "]",
                                        NeuronKind::kAuxiliary, polarity,
                                        bias(rng)));
  }
  targets.push_back(builder.AddNeuron("z", NeuronKind::kOutput,
                                      Polarity::kExcitatory, bias(rng)));
  all.insert(all.end(), targets.begin(), targets.end());

  for (NeuronId post : targets) {
    for (NeuronId pre : all) {
      if (!edge(rng)) continue;
      const int magnitude = weight(rng);
      const bool inhibitory =
          builder.neuron(pre).polarity == Polarity::kInhibitory;
      builder.AddSynapse(pre, post, inhibitory ? -magnitude : magnitude);
    }
  }
  return builder.Build();
}

VarThresholdArchitecture RandomArchitecture(int d, int m, std::uint64_t seed) {
  if (d < 1 || m < 1) {
    throw std::invalid_argument("architecture needs d >= 1 and m >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(-3, 3);
  VarThresholdArchitecture arch;
  arch.inputs = d;
  for (int g = 0; g < m; ++g) {
    VarThresholdGate gate;
    for (int i = 0; i < d; ++i) gate.input_weights.push_back(weight(rng));
    for (int h = 0; h < g; ++h) gate.gate_weights.push_back(weight(rng));
    arch.gates.push_back(std::move(gate));
  }
  arch.output = m - 1;
  return arch;
}

std::vector<Bits> RandomSamples(int d, int z, std::uint64_t seed) {
  if (d < 0 || d > 20 || z < 0 || z > (1 << d)) {
    throw std::invalid_argument("cannot draw " + std::to_string(z) +
                                " distinct points of {0,1}^" +
                                std::to_string(d));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> points(std::size_t{1} << d);
  std::iota(points.begin(), points.end(), 0);
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<Bits> samples;
  for (int j = 0; j < z; ++j) samples.push_back(Bin(points[j], d));
  return samples;
}

Bits RandomBits(int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  Bits bits(length);
  for (int i = 0; i < length; ++i) bits[i] = coin(rng);
  return bits;
}

}  // namespace neuroram
