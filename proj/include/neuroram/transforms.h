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

#ifndef NEURORAM_TRANSFORMS_H_
#define NEURORAM_TRANSFORMS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "neuroram/bits.h"
#include "neuroram/network.h"

namespace neuroram {

// Layered acyclic copy of a recurrent network that reproduces the
// distribution of its output at round t.
//
// Layer i (1 <= i <= t-1) holds a copy u_i of every non-input neuron u
// (auxiliaries and the output), so the network has (t-1)(l+1) auxiliary
// neurons. An edge u -> v becomes u_{i-1} -> v_i, input edges feed every
// layer, and the final output reads layer t-1 and the inputs.
struct FeedforwardNetwork {
  Network network;
  int rounds = 0;
  std::vector<NeuronId> inputs;
  std::vector<std::vector<NeuronId>> layers;  // layers[i-1] is layer i
  NeuronId output;
};

// Throws std::invalid_argument if t < 2 or the network does not have exactly
// one output neuron.
FeedforwardNetwork Unroll(const Network& network, int t);

// Recovers the layer structure of a serialized unrolled network from its
// manifest roles ("inputs", "layer[i]", "output"). Throws std::invalid_argument
// if they are missing.
FeedforwardNetwork FeedforwardFromManifest(Network network);

// Kahn topological sort over all synapses (self-loops count as cycles).
bool IsAcyclic(const Network& network);
// True iff every synapse goes input -> layer, layer i-1 -> layer i, or
// input / last layer -> output.
bool HasLayeredEdges(const FeedforwardNetwork& ff);

struct ThresholdGate {
  NeuronId id;
  std::string name;
  double mean = 0;       // bias of the stochastic neuron it stands for
  double threshold = 0;  // fires iff weighted input sum >= threshold
  std::vector<std::pair<NeuronId, double>> incoming;
};

// Deterministic linear threshold circuit. Gates are kept in evaluation
// order: each gate reads only inputs and earlier gates.
class ThresholdCircuit {
 public:
  // Throws std::invalid_argument if a gate reads a neuron that is neither an
  // input nor an earlier gate, or if output is not a gate.
  ThresholdCircuit(std::size_t neuron_count, std::vector<NeuronId> inputs,
                   std::vector<ThresholdGate> gates, NeuronId output,
                   double temperature);

  // Gates mirror ff's non-input neurons with threshold = bias.
  static ThresholdCircuit FromFeedforward(const FeedforwardNetwork& ff);

  // Draws every threshold independently from the logistic distribution with
  // mean = bias and scale = temperature by inverse CDF:
  // eta = bias + temperature * ln(p / (1 - p)), p uniform in (0, 1).
  void SampleThresholds(std::uint64_t seed);

  std::size_t neuron_count() const { return neuron_count_; }
  const std::vector<NeuronId>& inputs() const { return inputs_; }
  const std::vector<ThresholdGate>& gates() const { return gates_; }
  NeuronId output() const { return output_; }
  double temperature() const { return temperature_; }

  // Value of every neuron, indexed by id. Throws std::invalid_argument if the
  // input length does not match.
  std::vector<std::uint8_t> EvaluateAll(const Bits& inputs) const;
  bool Evaluate(const Bits& inputs) const;

 private:
  std::size_t neuron_count_;
  std::vector<NeuronId> inputs_;
  std::vector<ThresholdGate> gates_;
  NeuronId output_;
  double temperature_;
};

ThresholdCircuit SampleThresholdCircuit(const FeedforwardNetwork& ff,
                                        std::uint64_t seed);
bool EvalThresholdCircuit(const ThresholdCircuit& circuit, const Bits& inputs);

struct EquivalenceReport {
  int rounds = 0;
  std::size_t trials = 0;
  double p_snn = 0;      // Pr[z^t = 1] simulating the recurrent network
  double p_circuit = 0;  // same, over freshly sampled threshold circuits
  double delta = 0;      // |p_snn - p_circuit|
  double sigma = 0;      // binomial standard error of the difference
  double threshold = 0;  // 4 sigma
  bool within() const { return delta <= threshold; }
};

// Estimates Pr[z^t = 1] for the inputs (in network.inputs() order) both by
// simulating the network and by evaluating one freshly sampled threshold
// circuit of Unroll(network, t) per trial. Throws std::invalid_argument if
// trials < 10^4.
EquivalenceReport DistributionEquivalence(const Network& network,
                                          const Bits& inputs, int t,
                                          std::size_t trials,
                                          std::uint64_t seed);

// Same comparison between the recurrent network and its stochastic unrolled
// copy Unroll(network, t), both simulated for t rounds; p_circuit holds the
// unrolled network's estimate. Throws std::invalid_argument if
// trials < 10^4.
EquivalenceReport UnrollingEquivalence(const Network& network,
                                       const Bits& inputs, int t,
                                       std::size_t trials, std::uint64_t seed);

}  // namespace neuroram

#endif  // NEURORAM_TRANSFORMS_H_
