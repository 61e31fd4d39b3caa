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

#ifndef NEURORAM_NETWORK_H_
#define NEURORAM_NETWORK_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "neuroram/rational.h"

namespace neuroram {

// Weights and biases are exact. Constructions over n inputs use powers of
// two up to 2^(sqrt(n)+2), which leave the 64-bit range once n > 1024.
using BigInt = boost::multiprecision::cpp_int;

// Dense index 0..N-1 of a neuron within its network.
struct NeuronId {
  std::uint32_t value = 0;

  friend auto operator<=>(const NeuronId&, const NeuronId&) = default;
};

enum class NeuronKind { kInput, kOutput, kAuxiliary };
enum class Polarity { kExcitatory, kInhibitory };

std::string_view ToString(NeuronKind kind);
std::string_view ToString(Polarity polarity);

struct Neuron {
  NeuronId id;
  std::string name;
  NeuronKind kind = NeuronKind::kAuxiliary;
  Polarity polarity = Polarity::kExcitatory;
  BigInt bias;
};

struct Synapse {
  NeuronId pre;
  NeuronId post;
  BigInt weight;

  friend bool operator==(const Synapse&, const Synapse&) = default;
};

// Role name -> neurons playing that role, in role order.
using Manifest = std::map<std::string, std::vector<NeuronId>, std::less<>>;

// Immutable weighted directed graph of neurons. Synapses are stored grouped by
// postsynaptic neuron since the dynamics only read incoming edges. Instances
// are built with NetworkBuilder and are safe to share between threads.
class Network {
 public:
  std::size_t size() const { return neurons_.size(); }
  const std::vector<Neuron>& neurons() const { return neurons_; }
  const Neuron& neuron(NeuronId id) const { return neurons_.at(id.value); }

  // Synapses into post, ordered by presynaptic id.
  std::span<const Synapse> incoming(NeuronId post) const;
  // All synapses ordered by (post, pre).
  const std::vector<Synapse>& synapses() const { return synapses_; }

  // Weight of pre -> post, or nullopt if there is no such synapse.
  std::optional<BigInt> weight(NeuronId pre, NeuronId post) const;

  const Rational& temperature() const { return temperature_; }
  const std::optional<Manifest>& manifest() const { return manifest_; }

  // Neurons of the given role; throws std::out_of_range when absent.
  const std::vector<NeuronId>& role(std::string_view name) const;

  std::vector<NeuronId> inputs() const { return OfKind(NeuronKind::kInput); }
  std::vector<NeuronId> outputs() const { return OfKind(NeuronKind::kOutput); }
  std::size_t auxiliary_count() const;

 private:
  friend class NetworkBuilder;

  explicit Network(Rational temperature) : temperature_(temperature) {}
  std::vector<NeuronId> OfKind(NeuronKind kind) const;

  std::vector<Neuron> neurons_;
  std::vector<Synapse> synapses_;
  std::vector<std::size_t> incoming_begin_;  // size() + 1 offsets
  Rational temperature_;
  std::optional<Manifest> manifest_;
};

// Mutable staging area for a Network. Structural errors (unknown endpoint ids)
// throw immediately; semantic rules are left to Validate so that invalid
// networks can still be represented and diagnosed.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(Rational temperature) : temperature_(temperature) {}
  static NetworkBuilder From(const Network& network);

  NeuronId AddNeuron(std::string name, NeuronKind kind, Polarity polarity,
                     BigInt bias);
  // Excitatory input neuron with bias 0.
  NeuronId AddInput(std::string name);

  // Appends a synapse. Zero weights are dropped.
  void AddSynapse(NeuronId pre, NeuronId post, BigInt weight);
  // Replaces every pre -> post synapse by one of the given weight (0 removes).
  void SetSynapse(NeuronId pre, NeuronId post, BigInt weight);
  std::optional<BigInt> weight(NeuronId pre, NeuronId post) const;

  void AddRole(const std::string& role, NeuronId id);
  void ClearManifest() { manifest_.clear(); }
  const Manifest& manifest() const { return manifest_; }

  std::size_t size() const { return neurons_.size(); }
  const Neuron& neuron(NeuronId id) const { return neurons_.at(id.value); }
  void set_bias(NeuronId id, BigInt bias) {
    neurons_.at(id.value).bias = std::move(bias);
  }
  void set_temperature(Rational temperature) { temperature_ = temperature; }
  const Rational& temperature() const { return temperature_; }

  // Sum of the positive weights into post.
  BigInt ExcitatoryInput(NeuronId post) const;

  Network Build() const;

 private:
  void CheckId(NeuronId id) const;

  Rational temperature_;
  std::vector<Neuron> neurons_;
  std::vector<Synapse> synapses_;
  Manifest manifest_;
};

enum class ViolationRule {
  kInputInDegree,     // a synapse ends at an input neuron
  kPolarity,          // outgoing weight sign disagrees with polarity
  kIoPolarity,        // input or output neuron marked inhibitory
  kDuplicateSynapse,  // more than one synapse for an ordered pair
  kManifest,          // manifest refers to an unknown neuron
};

std::string_view ToString(ViolationRule rule);

struct Violation {
  ViolationRule rule;
  NeuronId neuron;
  std::optional<NeuronId> other;
  std::string message;
};

// Empty iff every structural rule holds. Violations are data, not failures.
std::vector<Violation> Validate(const Network& network);

}  // namespace neuroram

#endif  // NEURORAM_NETWORK_H_
