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

#ifndef NEURORAM_DYNAMICS_H_
#define NEURORAM_DYNAMICS_H_

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "neuroram/bits.h"
#include "neuroram/network.h"
#include "neuroram/rational.h"
#include "neuroram/rng.h"

namespace neuroram {

// Firing pattern of every neuron in one synchronous round.
class RoundState {
 public:
  RoundState(std::size_t neuron_count, int round)
      : fired_(neuron_count, 0), round_(round) {}

  int round() const { return round_; }
  std::size_t size() const { return fired_.size(); }
  bool fired(NeuronId id) const { return fired_.at(id.value) != 0; }
  void set(NeuronId id, bool value) { fired_.at(id.value) = value; }
  std::span<const std::uint8_t> bits() const { return fired_; }

  // Firing pattern of the given neurons, in the given order.
  Bits Pattern(std::span<const NeuronId> ids) const;

  friend bool operator==(const RoundState&, const RoundState&) = default;

 private:
  friend class Simulator;

  std::vector<std::uint8_t> fired_;
  int round_;
};

// Rounds 0..T.
using Trace = std::vector<RoundState>;

// Input neurons held at fixed bits. Unclamped inputs are silent.
class ClampSpec {
 public:
  ClampSpec() = default;
  // ids[i] is clamped to bits[i]; throws std::invalid_argument on length
  // mismatch.
  ClampSpec(std::span<const NeuronId> ids, const Bits& bits);

  void Set(NeuronId id, bool value);
  const std::vector<std::pair<NeuronId, bool>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<NeuronId, bool>> entries_;
};

// 1 / (1 + exp(-pot / lambda)), exactly 1/2 at pot = 0. Saturates to 1 (0)
// when pot / lambda > 40 (< -40), where the error is below 5e-18.
double FiringProbability(const BigInt& potential, const Rational& temperature);
double FiringProbability(std::int64_t potential, const Rational& temperature);

// Compiled view of a network for repeated simulation. Potentials are exact:
// networks whose weights and biases fit comfortably in 64 bits run on an
// int64 path, the rest on arbitrary-precision integers. The network must
// outlive the simulator.
class Simulator {
 public:
  explicit Simulator(const Network& network);

  const Network& network() const { return *network_; }
  bool uses_big_integers() const {
    return std::holds_alternative<BigTables>(tables_);
  }

  // Round 0: clamped inputs at their bits, every other neuron silent.
  // Throws std::logic_error if a clamp names a non-input neuron.
  RoundState Initial(const ClampSpec& clamps) const;

  // Sum of w(v, u) over v fired in prev, minus b(u). Throws std::logic_error
  // for input neurons.
  BigInt Potential(const RoundState& prev, NeuronId u) const;

  // Round prev.round() + 1. Neuron u's coin is rng's uniform for
  // (round, u), so the next state is a function of (prev, clamps, rng) only.
  RoundState Step(const RoundState& prev, const ClampSpec& clamps,
                  const CounterRng& rng) const;
  // In-place variant used by the hot loops; next must have the right size.
  void StepInto(const RoundState& prev, const ClampSpec& clamps,
                const CounterRng& rng, RoundState& next) const;

  Trace Run(const ClampSpec& clamps, int rounds, std::uint64_t seed) const;

 private:
  struct SmallTables {
    std::vector<std::size_t> begin;
    std::vector<std::uint32_t> pre;
    std::vector<std::int64_t> weight;
    std::vector<std::int64_t> bias;
  };
  struct BigTables {};

  void CheckClamps(const ClampSpec& clamps) const;

  const Network* network_;
  std::vector<std::uint8_t> is_input_;
  std::variant<SmallTables, BigTables> tables_;
};

// Free-function forms. Each compiles a Simulator, so loops should hold one.
BigInt Potential(const Network& network, const RoundState& prev, NeuronId u);
RoundState Step(const Network& network, const RoundState& prev,
                const ClampSpec& clamps, const CounterRng& rng);
Trace Run(const Network& network, const ClampSpec& clamps, int rounds,
          std::uint64_t seed);

}  // namespace neuroram

#endif  // NEURORAM_DYNAMICS_H_
