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

#include <deque>
#include <stdexcept>

#include "neuroram/transforms.h"

namespace neuroram {

FeedforwardNetwork Unroll(const Network& network, int t) {
  if (t < 2) {
    throw std::invalid_argument("unrolling needs t >= 2 rounds, got " +
                                std::to_string(t));
  }
  const std::vector<NeuronId> outputs = network.outputs();
  if (outputs.size() != 1) {
    throw std::invalid_argument("unrolling needs exactly one output neuron");
  }
  const NeuronId z = outputs.front();

  FeedforwardNetwork ff{NetworkBuilder(network.temperature()).Build(), t, {},
                        {}, {}};
  NetworkBuilder b(network.temperature());
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> input_copy(network.size(), kNone);
  for (NeuronId x : network.inputs()) {
    const NeuronId copy = b.AddInput(network.neuron(x).name);
    input_copy[x.value] = copy.value;
    ff.inputs.push_back(copy);
    b.AddRole("inputs", copy);
  }

  // layer_copy[i-1][u] is u_i.
  std::vector<std::vector<std::uint32_t>> layer_copy(
      t - 1, std::vector<std::uint32_t>(network.size(), kNone));
  for (int i = 1; i < t; ++i) {
    ff.layers.emplace_back();
    for (const Neuron& u : network.neurons()) {
      if (u.kind == NeuronKind::kInput) continue;
      const NeuronId copy =
          b.AddNeuron(u.name + "@" + std::to_string(i), NeuronKind::kAuxiliary,
                      u.polarity, u.bias);
      layer_copy[i - 1][u.id.value] = copy.value;
      ff.layers.back().push_back(copy);
      b.AddRole("layer[" + std::to_string(i) + "]", copy);
    }
  }
  ff.output = b.AddNeuron(network.neuron(z).name, NeuronKind::kOutput,
                          network.neuron(z).polarity, network.neuron(z).bias);
  b.AddRole("output", ff.output);

  for (const Synapse& s : network.synapses()) {
    const bool from_input = input_copy[s.pre.value] != kNone;
    for (int i = 1; i < t; ++i) {
      const NeuronId post{layer_copy[i - 1][s.post.value]};
      if (from_input) {
        b.AddSynapse(NeuronId{input_copy[s.pre.value]}, post, s.weight);
      } else if (i >= 2) {
        b.AddSynapse(NeuronId{layer_copy[i - 2][s.pre.value]}, post, s.weight);
      }
    }
    if (s.post == z) {
      const NeuronId pre{from_input ? input_copy[s.pre.value]
                                    : layer_copy[t - 2][s.pre.value]};
      b.AddSynapse(pre, ff.output, s.weight);
    }
  }
  ff.network = b.Build();
  return ff;
}

FeedforwardNetwork FeedforwardFromManifest(Network network) {
  if (!network.manifest()) {
    throw std::invalid_argument("unrolled network needs a manifest");
  }
  const Manifest& manifest = *network.manifest();
  FeedforwardNetwork ff{NetworkBuilder(network.temperature()).Build(), 0, {},
                        {}, {}};
  if (auto it = manifest.find("inputs"); it != manifest.end()) {
    ff.inputs = it->second;
  }
  auto out = manifest.find("output");
  if (out == manifest.end() || out->second.size() != 1) {
    throw std::invalid_argument("unrolled network needs one 'output' role");
  }
  ff.output = out->second.front();
  for (int i = 1;; ++i) {
    auto it = manifest.find("layer[" + std::to_string(i) + "]");
    if (it == manifest.end()) break;
    ff.layers.push_back(it->second);
  }
  if (ff.layers.empty()) {
    throw std::invalid_argument("unrolled network has no 'layer[1]' role");
  }
  ff.rounds = static_cast<int>(ff.layers.size()) + 1;
  ff.network = std::move(network);
  return ff;
}

bool IsAcyclic(const Network& network) {
  std::vector<int> in_degree(network.size(), 0);
  std::vector<std::vector<std::uint32_t>> out(network.size());
  for (const Synapse& s : network.synapses()) {
    ++in_degree[s.post.value];
    out[s.pre.value].push_back(s.post.value);
  }
  std::deque<std::uint32_t> ready;
  for (std::uint32_t u = 0; u < network.size(); ++u) {
    if (in_degree[u] == 0) ready.push_back(u);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::uint32_t u = ready.front();
    ready.pop_front();
    ++visited;
    for (std::uint32_t v : out[u]) {
      if (--in_degree[v] == 0) ready.push_back(v);
    }
  }
  return visited == network.size();
}

bool HasLayeredEdges(const FeedforwardNetwork& ff) {
  // Layer number per neuron: 0 for inputs, i for layer i, t for the output.
  std::vector<int> layer(ff.network.size(), -1);
  for (NeuronId x : ff.inputs) layer[x.value] = 0;
  for (std::size_t i = 0; i < ff.layers.size(); ++i) {
    for (NeuronId u : ff.layers[i]) layer[u.value] = static_cast<int>(i) + 1;
  }
  layer[ff.output.value] = ff.rounds;
  for (const Synapse& s : ff.network.synapses()) {
    const int from = layer[s.pre.value];
    const int to = layer[s.post.value];
    if (from < 0 || to <= 0) return false;
    if (from != 0 && from != to - 1) return false;
  }
  return true;
}

}  // namespace neuroram
