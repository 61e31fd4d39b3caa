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

#include "neuroram/network.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace neuroram {

std::string_view ToString(NeuronKind kind) {
  switch (kind) {
    case NeuronKind::kInput:
      return "input";
    case NeuronKind::kOutput:
      return "output";
    case NeuronKind::kAuxiliary:
      return "auxiliary";
  }
  return "?";
}

std::string_view ToString(Polarity polarity) {
  return polarity == Polarity::kExcitatory ? "excitatory" : "inhibitory";
}

std::string_view ToString(ViolationRule rule) {
  switch (rule) {
    case ViolationRule::kInputInDegree:
      return "input-in-degree";
    case ViolationRule::kPolarity:
      return "polarity";
    case ViolationRule::kIoPolarity:
      return "io-polarity";
    case ViolationRule::kDuplicateSynapse:
      return "duplicate-synapse";
    case ViolationRule::kManifest:
      return "manifest";
  }
  return "?";
}

std::span<const Synapse> Network::incoming(NeuronId post) const {
  const std::size_t begin = incoming_begin_.at(post.value);
  const std::size_t end = incoming_begin_.at(post.value + 1);
  return std::span<const Synapse>(synapses_).subspan(begin, end - begin);
}

std::optional<BigInt> Network::weight(NeuronId pre, NeuronId post) const {
  for (const Synapse& s : incoming(post)) {
    if (s.pre == pre) return s.weight;
  }
  return std::nullopt;
}

const std::vector<NeuronId>& Network::role(std::string_view name) const {
  if (manifest_) {
    auto it = manifest_->find(name);
    if (it != manifest_->end()) return it->second;
  }
  throw std::out_of_range("network has no role '" + std::string(name) + "'");
}

std::size_t Network::auxiliary_count() const {
  return static_cast<std::size_t>(
      std::count_if(neurons_.begin(), neurons_.end(), [](const Neuron& n) {
        return n.kind == NeuronKind::kAuxiliary;
      }));
}

std::vector<NeuronId> Network::OfKind(NeuronKind kind) const {
  std::vector<NeuronId> ids;
  for (const Neuron& n : neurons_) {
    if (n.kind == kind) ids.push_back(n.id);
  }
  return ids;
}

NetworkBuilder NetworkBuilder::From(const Network& network) {
  NetworkBuilder builder(network.temperature());
  builder.neurons_ = network.neurons();
  builder.synapses_ = network.synapses();
  if (network.manifest()) builder.manifest_ = *network.manifest();
  return builder;
}

NeuronId NetworkBuilder::AddNeuron(std::string name, NeuronKind kind,
                                   Polarity polarity, BigInt bias) {
  const NeuronId id{static_cast<std::uint32_t>(neurons_.size())};
  neurons_.push_back(Neuron{id, std::move(name), kind, polarity, std::move(bias)});
  return id;
}

NeuronId NetworkBuilder::AddInput(std::string name) {
  return AddNeuron(std::move(name), NeuronKind::kInput, Polarity::kExcitatory,
                   0);
}

void NetworkBuilder::CheckId(NeuronId id) const {
  if (id.value >= neurons_.size()) {
    throw std::invalid_argument("unknown neuron id " +
                                std::to_string(id.value));
  }
}

void NetworkBuilder::AddSynapse(NeuronId pre, NeuronId post, BigInt weight) {
  CheckId(pre);
  CheckId(post);
  if (weight == 0) return;
  synapses_.push_back(Synapse{pre, post, std::move(weight)});
}

void NetworkBuilder::SetSynapse(NeuronId pre, NeuronId post, BigInt weight) {
  CheckId(pre);
  CheckId(post);
  std::erase_if(synapses_, [&](const Synapse& s) {
    return s.pre == pre && s.post == post;
  });
  AddSynapse(pre, post, std::move(weight));
}

std::optional<BigInt> NetworkBuilder::weight(NeuronId pre,
                                             NeuronId post) const {
  for (const Synapse& s : synapses_) {
    if (s.pre == pre && s.post == post) return s.weight;
  }
  return std::nullopt;
}

void NetworkBuilder::AddRole(const std::string& role, NeuronId id) {
  CheckId(id);
  manifest_[role].push_back(id);
}

BigInt NetworkBuilder::ExcitatoryInput(NeuronId post) const {
  BigInt total = 0;
  for (const Synapse& s : synapses_) {
    if (s.post == post && s.weight > 0) total += s.weight;
  }
  return total;
}

Network NetworkBuilder::Build() const {
  Network network(temperature_);
  network.neurons_ = neurons_;
  network.synapses_ = synapses_;
  std::stable_sort(network.synapses_.begin(), network.synapses_.end(),
                   [](const Synapse& a, const Synapse& b) {
                     return std::tie(a.post, a.pre) < std::tie(b.post, b.pre);
                   });
  network.incoming_begin_.assign(neurons_.size() + 1, 0);
  for (const Synapse& s : network.synapses_) {
    ++network.incoming_begin_[s.post.value + 1];
  }
  for (std::size_t i = 0; i < neurons_.size(); ++i) {
    network.incoming_begin_[i + 1] += network.incoming_begin_[i];
  }
  if (!manifest_.empty()) network.manifest_ = manifest_;
  return network;
}

std::vector<Violation> Validate(const Network& network) {
  std::vector<Violation> violations;
  auto describe = [&](NeuronId id) {
    const Neuron& n = network.neuron(id);
    return "neuron " + std::to_string(id.value) + " (" + n.name + ")";
  };

  for (const Neuron& n : network.neurons()) {
    if (n.kind != NeuronKind::kAuxiliary &&
        n.polarity != Polarity::kExcitatory) {
      violations.push_back({ViolationRule::kIoPolarity, n.id, std::nullopt,
                            describe(n.id) + " is " +
                                std::string(ToString(n.kind)) +
                                " but not excitatory"});
    }
  }

  const auto& synapses = network.synapses();
  for (std::size_t i = 0; i < synapses.size(); ++i) {
    const Synapse& s = synapses[i];
    const Neuron& pre = network.neuron(s.pre);
    const Neuron& post = network.neuron(s.post);
    if (post.kind == NeuronKind::kInput) {
      violations.push_back({ViolationRule::kInputInDegree, s.post, s.pre,
                            "synapse from " + describe(s.pre) +
                                " into input " + describe(s.post)});
    }
    const bool bad_sign = pre.polarity == Polarity::kExcitatory
                              ? s.weight < 0
                              : s.weight > 0;
    if (bad_sign) {
      std::ostringstream msg;
      msg << ToString(pre.polarity) << " " << describe(s.pre)
          << " has outgoing weight " << s.weight << " to " << describe(s.post);
      violations.push_back(
          {ViolationRule::kPolarity, s.pre, s.post, msg.str()});
    }
    if (i > 0 && synapses[i - 1].pre == s.pre && synapses[i - 1].post == s.post) {
      violations.push_back({ViolationRule::kDuplicateSynapse, s.pre, s.post,
                            "more than one synapse from " + describe(s.pre) +
                                " to " + describe(s.post)});
    }
  }

  if (network.manifest()) {
    for (const auto& [role, ids] : *network.manifest()) {
      for (NeuronId id : ids) {
        if (id.value >= network.size()) {
          violations.push_back({ViolationRule::kManifest, id, std::nullopt,
                                "role '" + role + "' names unknown neuron " +
                                    std::to_string(id.value)});
        }
      }
    }
  }
  return violations;
}

}  // namespace neuroram
