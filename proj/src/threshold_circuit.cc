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

#include <cmath>
#include <stdexcept>

#include "neuroram/rng.h"
#include "neuroram/transforms.h"

namespace neuroram {

ThresholdCircuit::ThresholdCircuit(std::size_t neuron_count,
                                   std::vector<NeuronId> inputs,
                                   std::vector<ThresholdGate> gates,
                                   NeuronId output, double temperature)
    : neuron_count_(neuron_count),
      inputs_(std::move(inputs)),
      gates_(std::move(gates)),
      output_(output),
      temperature_(temperature) {
  std::vector<std::uint8_t> known(neuron_count_, 0);
  for (NeuronId x : inputs_) known.at(x.value) = 1;
  bool output_is_gate = false;
  for (const ThresholdGate& gate : gates_) {
    for (const auto& [pre, weight] : gate.incoming) {
      if (pre.value >= neuron_count_ || !known[pre.value]) {
        throw std::invalid_argument("gate " + gate.name +
                                    " reads a neuron that is not evaluated "
                                    "before it");
      }
    }
    known.at(gate.id.value) = 1;
    output_is_gate = output_is_gate || gate.id == output_;
  }
  if (!output_is_gate) throw std::invalid_argument("output is not a gate");
}

ThresholdCircuit ThresholdCircuit::FromFeedforward(
    const FeedforwardNetwork& ff) {
  const Network& net = ff.network;
  std::vector<NeuronId> order;
  for (const auto& layer : ff.layers) {
    order.insert(order.end(), layer.begin(), layer.end());
  }
  order.push_back(ff.output);
  std::vector<ThresholdGate> gates;
  gates.reserve(order.size());
  for (NeuronId id : order) {
    const Neuron& neuron = net.neuron(id);
    ThresholdGate gate;
    gate.id = id;
    gate.name = neuron.name;
    gate.mean = neuron.bias.convert_to<double>();
    gate.threshold = gate.mean;
    for (const Synapse& s : net.incoming(id)) {
      gate.incoming.emplace_back(s.pre, s.weight.convert_to<double>());
    }
    gates.push_back(std::move(gate));
  }
  return ThresholdCircuit(net.size(), ff.inputs, std::move(gates), ff.output,
                          net.temperature().ToDouble());
}

void ThresholdCircuit::SampleThresholds(std::uint64_t seed) {
  const CounterRng rng(seed);
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const double p = rng.Uniform(RngStream::kLogisticBias, g, 0);
    gates_[g].threshold =
        gates_[g].mean + temperature_ * (std::log(p) - std::log1p(-p));
  }
}

std::vector<std::uint8_t> ThresholdCircuit::EvaluateAll(
    const Bits& inputs) const {
  if (inputs.size() != inputs_.size()) {
    throw std::invalid_argument("circuit has " +
                                std::to_string(inputs_.size()) +
                                " inputs, got " +
                                std::to_string(inputs.size()) + " bits");
  }
  std::vector<std::uint8_t> value(neuron_count_, 0);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    value[inputs_[i].value] = inputs[i];
  }
  for (const ThresholdGate& gate : gates_) {
    double sum = 0;
    for (const auto& [pre, weight] : gate.incoming) {
      if (value[pre.value]) sum += weight;
    }
    value[gate.id.value] = sum >= gate.threshold;
  }
  return value;
}

bool ThresholdCircuit::Evaluate(const Bits& inputs) const {
  return EvaluateAll(inputs)[output_.value] != 0;
}

ThresholdCircuit SampleThresholdCircuit(const FeedforwardNetwork& ff,
                                        std::uint64_t seed) {
  ThresholdCircuit circuit = ThresholdCircuit::FromFeedforward(ff);
  circuit.SampleThresholds(seed);
  return circuit;
}

bool EvalThresholdCircuit(const ThresholdCircuit& circuit,
                          const Bits& inputs) {
  return circuit.Evaluate(inputs);
}

}  // namespace neuroram
