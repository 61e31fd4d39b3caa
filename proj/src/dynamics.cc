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

#include "neuroram/dynamics.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace neuroram {
namespace {

constexpr double kSaturation = 40.0;

// Weighted sums stay below this magnitude on the int64 path, which leaves
// room for the exact pot * denominator product in 128 bits.
const BigInt kSmallLimit = BigInt(1) << 62;

double Sigmoid(double x) {
  if (x > kSaturation) return 1.0;
  if (x < -kSaturation) return 0.0;
  if (x == 0.0) return 0.5;
  return 1.0 / (1.0 + std::exp(-x));
}

}  // namespace

Bits RoundState::Pattern(std::span<const NeuronId> ids) const {
  Bits bits(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) bits[i] = fired(ids[i]);
  return bits;
}

ClampSpec::ClampSpec(std::span<const NeuronId> ids, const Bits& bits) {
  if (ids.size() != bits.size()) {
    throw std::invalid_argument("clamp: " + std::to_string(bits.size()) +
                                " bits for " + std::to_string(ids.size()) +
                                " neurons");
  }
  for (std::size_t i = 0; i < ids.size(); ++i) Set(ids[i], bits[i]);
}

void ClampSpec::Set(NeuronId id, bool value) {
  for (auto& [existing, bit] : entries_) {
    if (existing == id) {
      bit = value;
      return;
    }
  }
  entries_.emplace_back(id, value);
}

double FiringProbability(const BigInt& potential, const Rational& temperature) {
  // x = pot * q / p for temperature p / q; decide saturation exactly.
  const BigInt scaled = potential * temperature.denominator();
  const BigInt limit = BigInt(temperature.numerator()) * 40;
  if (scaled > limit) return 1.0;
  if (scaled < -limit) return 0.0;
  return Sigmoid(scaled.convert_to<double>() /
                 static_cast<double>(temperature.numerator()));
}

double FiringProbability(std::int64_t potential, const Rational& temperature) {
  const __int128 scaled =
      static_cast<__int128>(potential) * temperature.denominator();
  const __int128 limit = static_cast<__int128>(temperature.numerator()) * 40;
  if (scaled > limit) return 1.0;
  if (scaled < -limit) return 0.0;
  return Sigmoid(static_cast<double>(scaled) /
                 static_cast<double>(temperature.numerator()));
}

Simulator::Simulator(const Network& network) : network_(&network) {
  const std::size_t n = network.size();
  is_input_.resize(n);
  bool small = true;
  for (const Neuron& neuron : network.neurons()) {
    is_input_[neuron.id.value] = neuron.kind == NeuronKind::kInput;
    BigInt magnitude = abs(neuron.bias);
    for (const Synapse& s : network.incoming(neuron.id)) {
      magnitude += abs(s.weight);
    }
    if (magnitude >= kSmallLimit) small = false;
  }
  if (!small) {
    tables_ = BigTables{};
    return;
  }
  SmallTables tables;
  tables.begin.reserve(n + 1);
  tables.bias.reserve(n);
  tables.begin.push_back(0);
  for (const Neuron& neuron : network.neurons()) {
    for (const Synapse& s : network.incoming(neuron.id)) {
      tables.pre.push_back(s.pre.value);
      tables.weight.push_back(s.weight.convert_to<std::int64_t>());
    }
    tables.begin.push_back(tables.pre.size());
    tables.bias.push_back(neuron.bias.convert_to<std::int64_t>());
  }
  tables_ = std::move(tables);
}

void Simulator::CheckClamps(const ClampSpec& clamps) const {
  for (const auto& [id, bit] : clamps.entries()) {
    if (id.value >= is_input_.size() || !is_input_[id.value]) {
      throw std::logic_error("only input neurons may be clamped (neuron " +
                             std::to_string(id.value) + ")");
    }
  }
}

RoundState Simulator::Initial(const ClampSpec& clamps) const {
  CheckClamps(clamps);
  RoundState state(network_->size(), 0);
  for (const auto& [id, bit] : clamps.entries()) state.set(id, bit);
  return state;
}

BigInt Simulator::Potential(const RoundState& prev, NeuronId u) const {
  if (is_input_.at(u.value)) {
    throw std::logic_error("potential is undefined for input neuron " +
                           std::to_string(u.value));
  }
  BigInt pot = -network_->neuron(u).bias;
  for (const Synapse& s : network_->incoming(u)) {
    if (prev.fired(s.pre)) pot += s.weight;
  }
  return pot;
}

void Simulator::StepInto(const RoundState& prev, const ClampSpec& clamps,
                         const CounterRng& rng, RoundState& next) const {
  const std::size_t n = network_->size();
  const auto round = static_cast<std::uint64_t>(prev.round() + 1);
  next.round_ = prev.round() + 1;
  next.fired_.assign(n, 0);
  const Rational& temperature = network_->temperature();
  const std::uint8_t* fired = prev.fired_.data();

  if (const auto* t = std::get_if<SmallTables>(&tables_)) {
    for (std::size_t u = 0; u < n; ++u) {
      if (is_input_[u]) continue;
      std::int64_t pot = -t->bias[u];
      for (std::size_t k = t->begin[u]; k < t->begin[u + 1]; ++k) {
        if (fired[t->pre[k]]) pot += t->weight[k];
      }
      const double p = FiringProbability(pot, temperature);
      next.fired_[u] = rng.Uniform(RngStream::kFiring, round, u) < p;
    }
  } else {
    for (std::size_t u = 0; u < n; ++u) {
      if (is_input_[u]) continue;
      const NeuronId id{static_cast<std::uint32_t>(u)};
      const double p = FiringProbability(Potential(prev, id), temperature);
      next.fired_[u] = rng.Uniform(RngStream::kFiring, round, u) < p;
    }
  }
  for (const auto& [id, bit] : clamps.entries()) next.fired_[id.value] = bit;
}

RoundState Simulator::Step(const RoundState& prev, const ClampSpec& clamps,
                           const CounterRng& rng) const {
  CheckClamps(clamps);
  RoundState next(network_->size(), prev.round() + 1);
  StepInto(prev, clamps, rng, next);
  return next;
}

Trace Simulator::Run(const ClampSpec& clamps, int rounds,
                     std::uint64_t seed) const {
  if (rounds < 0) throw std::invalid_argument("Run: rounds must be >= 0");
  const CounterRng rng(seed);
  Trace trace;
  trace.reserve(static_cast<std::size_t>(rounds) + 1);
  trace.push_back(Initial(clamps));
  for (int t = 1; t <= rounds; ++t) {
    RoundState next(network_->size(), t);
    StepInto(trace.back(), clamps, rng, next);
    trace.push_back(std::move(next));
  }
  return trace;
}

BigInt Potential(const Network& network, const RoundState& prev, NeuronId u) {
  return Simulator(network).Potential(prev, u);
}

RoundState Step(const Network& network, const RoundState& prev,
                const ClampSpec& clamps, const CounterRng& rng) {
  return Simulator(network).Step(prev, clamps, rng);
}

Trace Run(const Network& network, const ClampSpec& clamps, int rounds,
          std::uint64_t seed) {
  return Simulator(network).Run(clamps, rounds, seed);
}

}  // namespace neuroram
