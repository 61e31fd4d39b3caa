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

#include "neuroram/neuro_ram.h"

#include <bit>
#include <stdexcept>

namespace neuroram {
namespace {

BigInt Pow2(int exponent) { return BigInt(1) << exponent; }

std::string Indexed(const std::string& prefix, const char* base, int i) {
  return prefix + base + "[" + std::to_string(i) + "]";
}

// Relay pair for one index bit: y_{j,1} (excitatory) and y_{j,1'}
// (inhibitory), both with bias 1 and weight 2 from the index neuron.
void AddRelays(NetworkBuilder& b, std::span<const NeuronId> bits,
               const std::string& prefix, const char* name,
               std::vector<NeuronId>& relay, std::vector<NeuronId>& inhibitor) {
  const std::string inh_name = std::string(name) + "'";
  for (std::size_t j = 0; j < bits.size(); ++j) {
    const int jj = static_cast<int>(j);
    relay.push_back(b.AddNeuron(Indexed(prefix, name, jj),
                                NeuronKind::kAuxiliary, Polarity::kExcitatory,
                                1));
    inhibitor.push_back(b.AddNeuron(Indexed(prefix, inh_name.c_str(), jj),
                                    NeuronKind::kAuxiliary,
                                    Polarity::kInhibitory, 1));
    b.AddSynapse(bits[j], relay.back(), 2);
    b.AddSynapse(bits[j], inhibitor.back(), 2);
  }
}

// Selector that fires two rounds after its relays see bin(value):
// +2 from relays of one bits, -2 from inhibitors of zero bits,
// bias 2 * |bin(value)|_1 - 1.
NeuronId AddSelector(NetworkBuilder& b, const std::string& name, int value,
                     const std::vector<NeuronId>& relay,
                     const std::vector<NeuronId>& inhibitor) {
  const int ones = std::popcount(static_cast<unsigned>(value));
  const NeuronId id = b.AddNeuron(name, NeuronKind::kAuxiliary,
                                  Polarity::kExcitatory, 2 * ones - 1);
  for (std::size_t j = 0; j < relay.size(); ++j) {
    if ((value >> j) & 1) {
      b.AddSynapse(relay[j], id, 2);
    } else {
      b.AddSynapse(inhibitor[j], id, -2);
    }
  }
  return id;
}

void AddRoles(NetworkBuilder& b, const std::string& role,
              const std::vector<NeuronId>& ids) {
  for (NeuronId id : ids) b.AddRole(role, id);
}

BigInt DecBig(const Bits& bits) {
  BigInt value = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) value += Pow2(static_cast<int>(i));
  }
  return value;
}

}  // namespace

void CheckNeuroRamSize(int n) {
  // n = 4^m: a single set bit at an even position, m >= 1.
  if (n < 4 || !std::has_single_bit(static_cast<unsigned>(n)) ||
      std::countr_zero(static_cast<unsigned>(n)) % 2 != 0) {
    throw std::invalid_argument("indexing network needs n = 2^(2m), m >= 1; got " +
                                std::to_string(n));
  }
}

std::size_t NeuroRamLayout::expected_auxiliary_count(
    bool output_is_auxiliary) const {
  std::size_t count = 2 * log_n + 3 * sqrt_n + (5 * sqrt_n + 1) +
                      (5 * sqrt_n - 1) + 4 * sqrt_n;
  if (reset) ++count;
  if (start_relay) ++count;
  if (output_is_auxiliary) ++count;
  return count;
}

std::size_t NeuroRamLayout::Target(const Bits& y_bits) const {
  const int half = log_n / 2;
  const Bits y1(y_bits.begin(), y_bits.begin() + half);
  const Bits y2(y_bits.begin() + half, y_bits.end());
  return static_cast<std::size_t>(sqrt_n * Dec(y1) + Dec(y2));
}

NeuroRamLayout AddNeuroRam(NetworkBuilder& b, std::span<const NeuronId> data,
                           std::span<const NeuronId> index,
                           const NeuroRamOptions& options) {
  const int n = static_cast<int>(data.size());
  CheckNeuroRamSize(n);
  const int log_n = std::countr_zero(static_cast<unsigned>(n));
  const int s = 1 << (log_n / 2);
  if (static_cast<int>(index.size()) != log_n) {
    throw std::invalid_argument("indexing network over " + std::to_string(n) +
                                " inputs needs " + std::to_string(log_n) +
                                " index neurons");
  }
  const std::string& p = options.prefix;

  NeuroRamLayout L;
  L.n = n;
  L.sqrt_n = s;
  L.log_n = log_n;
  L.x.assign(data.begin(), data.end());
  L.y.assign(index.begin(), index.end());

  // Bucket and position selection.
  AddRelays(b, index.first(log_n / 2), p, "y1", L.y1_relay, L.y1_inhibitor);
  AddRelays(b, index.subspan(log_n / 2), p, "y2", L.y2_relay, L.y2_inhibitor);
  for (int i = 0; i < s; ++i) {
    L.g.push_back(
        AddSelector(b, Indexed(p, "g", i), i, L.y1_relay, L.y1_inhibitor));
  }
  for (int j = 0; j < s; ++j) {
    L.f.push_back(
        AddSelector(b, Indexed(p, "f", j), j, L.y2_relay, L.y2_inhibitor));
  }

  // Encoding: w(x_{i s + j}, e_i) = 2^(s - j), b(e_i) = 2^(s+2) + 2^s - 1.
  for (int i = 0; i < s; ++i) {
    const NeuronId e =
        b.AddNeuron(Indexed(p, "e", i), NeuronKind::kAuxiliary,
                    Polarity::kExcitatory, Pow2(s + 2) + Pow2(s) - 1);
    L.e.push_back(e);
    for (int j = 0; j < s; ++j) b.AddSynapse(data[i * s + j], e, Pow2(s - j));
    b.AddSynapse(L.g[i], e, Pow2(s + 2));
  }

  // Clock chain c_0 .. c_{5s} with inhibitors c_1' .. c_{5s-1}'.
  const int ticks = 5 * s;
  const auto aux_exc = [&](const std::string& name, BigInt bias) {
    return b.AddNeuron(name, NeuronKind::kAuxiliary, Polarity::kExcitatory,
                       std::move(bias));
  };
  const auto aux_inh = [&](const std::string& name, BigInt bias) {
    return b.AddNeuron(name, NeuronKind::kAuxiliary, Polarity::kInhibitory,
                       std::move(bias));
  };
  L.clock.push_back(aux_exc(Indexed(p, "c", 0), 1));
  if (options.delayed_start) {
    L.start_relay = aux_exc(p + "start", 1);
    for (NeuronId x : data) b.AddSynapse(x, *L.start_relay, 2);
    b.AddSynapse(*L.start_relay, L.clock[0], 2);
  } else {
    for (NeuronId x : data) b.AddSynapse(x, L.clock[0], 2);
  }
  for (int i = 1; i <= ticks; ++i) {
    L.clock.push_back(aux_exc(Indexed(p, "c", i), 1));
    b.AddSynapse(L.clock[i - 1], L.clock[i], 2);
    if (i < ticks) {
      const NeuronId inh = aux_inh(Indexed(p, "c'", i), 1);
      L.clock_inhibitor.push_back(inh);
      b.AddSynapse(L.clock[i - 1], inh, 2);
      b.AddSynapse(inh, L.clock[0], -2 * BigInt(n));
    }
  }
  b.AddSynapse(L.clock_inhibitor[0], L.clock[1], -2);

  // Output.
  L.z = b.AddNeuron(p + "z", options.output_kind, Polarity::kExcitatory, 1);
  b.AddSynapse(L.z, L.z, 2);

  // Decoders for each position j, all keyed to clock neuron c_{5j+2}.
  for (int j = 0; j < s; ++j) {
    const NeuronId tick = L.clock[5 * j + 2];

    const NeuronId d1 = aux_exc(Indexed(p, "d1", j), 2 * s + 3);
    for (NeuronId e : L.e) b.AddSynapse(e, d1, 2);
    b.AddSynapse(L.f[j], d1, 2);
    b.AddSynapse(tick, d1, 2 * s);
    b.AddSynapse(d1, L.z, 2);

    const NeuronId d2 = aux_exc(Indexed(p, "d2", j), 1);
    b.AddSynapse(tick, d2, 2);
    b.AddSynapse(d2, d2, 2);
    for (NeuronId e : L.e) b.AddSynapse(d2, e, Pow2(s - j - 1));

    const NeuronId d3 = aux_inh(Indexed(p, "d3", j), 3);
    const NeuronId d3c = aux_exc(Indexed(p, "d3'", j), 3);
    for (NeuronId target : {d3, d3c}) {
      for (NeuronId e : L.e) b.AddSynapse(e, target, 2);
      b.AddSynapse(tick, target, 2);
    }
    b.AddSynapse(d3c, d3c, 4);
    b.AddSynapse(d3c, d3, 4);
    for (NeuronId e : L.e) b.AddSynapse(d3, e, -Pow2(s - j));

    L.d1.push_back(d1);
    L.d2.push_back(d2);
    L.d3.push_back(d3);
    L.d3_companion.push_back(d3c);
  }

  // Reset: fires one round before the window ends and silences every neuron
  // that holds state through a self-loop.
  if (options.with_reset) {
    L.reset = aux_inh(p + "r", 1);
    b.AddSynapse(L.clock[ticks - 2], *L.reset, 2);
    std::vector<NeuronId> targets;
    for (const auto* group : {&L.d1, &L.d2, &L.d3, &L.d3_companion}) {
      targets.insert(targets.end(), group->begin(), group->end());
    }
    targets.push_back(L.z);
    for (NeuronId target : targets) {
      b.AddSynapse(*L.reset, target, -2 * b.ExcitatoryInput(target));
    }
  }

  AddRoles(b, p + "x", L.x);
  AddRoles(b, p + "y", L.y);
  AddRoles(b, p + "y1", L.y1_relay);
  AddRoles(b, p + "y1'", L.y1_inhibitor);
  AddRoles(b, p + "y2", L.y2_relay);
  AddRoles(b, p + "y2'", L.y2_inhibitor);
  AddRoles(b, p + "g", L.g);
  AddRoles(b, p + "f", L.f);
  AddRoles(b, p + "e", L.e);
  if (L.start_relay) b.AddRole(p + "start", *L.start_relay);
  AddRoles(b, p + "c", L.clock);
  AddRoles(b, p + "c'", L.clock_inhibitor);
  AddRoles(b, p + "d1", L.d1);
  AddRoles(b, p + "d2", L.d2);
  AddRoles(b, p + "d3", L.d3);
  AddRoles(b, p + "d3'", L.d3_companion);
  b.AddRole(p + "z", L.z);
  if (L.reset) b.AddRole(p + "r", *L.reset);
  return L;
}

std::pair<Network, NeuroRamLayout> BuildNeuroRam(int n, bool with_reset,
                                                 Rational temperature) {
  CheckNeuroRamSize(n);
  const int log_n = std::countr_zero(static_cast<unsigned>(n));
  NetworkBuilder b(temperature);
  std::vector<NeuronId> x;
  std::vector<NeuronId> y;
  for (int i = 0; i < n; ++i) x.push_back(b.AddInput(Indexed("", "x", i)));
  for (int j = 0; j < log_n; ++j) y.push_back(b.AddInput(Indexed("", "y", j)));
  NeuroRamOptions options;
  options.with_reset = with_reset;
  NeuroRamLayout layout = AddNeuroRam(b, x, y, options);
  return {b.Build(), std::move(layout)};
}

bool CheckWeightFact(const Network& network, const NeuroRamLayout& layout) {
  const BigInt limit = Pow2(layout.sqrt_n + 2);
  for (std::size_t i = 0; i < layout.e.size(); ++i) {
    BigInt total = 0;
    for (const Synapse& s : network.incoming(layout.e[i])) {
      if (s.pre != layout.g[i] && s.weight > 0) total += s.weight;
    }
    if (total > limit) return false;
  }
  return true;
}

BigInt ExpectedEncodingPotential(const Bits& bucket) {
  const int s = static_cast<int>(bucket.size());
  BigInt total = 0;
  for (int j = 0; j < s; ++j) {
    if (bucket[j]) total += Pow2(s - j);
  }
  if (total != 2 * DecBig(Reversed(bucket))) {
    throw std::logic_error("encoding potential disagrees with 2*dec(reverse)");
  }
  return total;
}

void CheckInstance(const NeuroRamLayout& layout,
                   const IndexInstance& instance) {
  if (static_cast<int>(instance.x.size()) != layout.n ||
      static_cast<int>(instance.y.size()) != layout.log_n) {
    throw std::invalid_argument(
        "indexing instance needs " + std::to_string(layout.n) + " data bits and " +
        std::to_string(layout.log_n) + " index bits");
  }
}

bool GroundTruth(const NeuroRamLayout& layout, const IndexInstance& instance) {
  CheckInstance(layout, instance);
  return instance.x[layout.Target(instance.y)];
}

IndexingRunner::IndexingRunner(int n, Rational temperature, bool with_reset)
    : IndexingRunner(BuildNeuroRam(n, with_reset, temperature)) {}

IndexingRunner::IndexingRunner(std::pair<Network, NeuroRamLayout> built)
    : network_(std::move(built.first)),
      layout_(std::move(built.second)),
      simulator_(network_) {}

ClampSpec IndexingRunner::Clamps(const IndexInstance& instance) const {
  CheckInstance(layout_, instance);
  ClampSpec clamps(layout_.x, instance.x);
  for (std::size_t j = 0; j < layout_.y.size(); ++j) {
    clamps.Set(layout_.y[j], instance.y[j]);
  }
  return clamps;
}

Trace IndexingRunner::RunTrace(const IndexInstance& instance,
                               std::uint64_t seed) const {
  return simulator_.Run(Clamps(instance), layout_.rounds(), seed);
}

bool IndexingRunner::Solve(const IndexInstance& instance,
                           std::uint64_t seed) const {
  const ClampSpec clamps = Clamps(instance);
  const CounterRng rng(seed);
  RoundState state = simulator_.Initial(clamps);
  RoundState next = state;
  for (int t = 1; t <= layout_.rounds(); ++t) {
    simulator_.StepInto(state, clamps, rng, next);
    std::swap(state, next);
  }
  return state.fired(layout_.z);
}

bool SolveIndex(int n, const IndexInstance& instance, std::uint64_t seed,
                Rational temperature) {
  return IndexingRunner(n, temperature).Solve(instance, seed);
}

ClockCheck CheckClockTrace(const NeuroRamLayout& layout, const Trace& trace) {
  const int delay = layout.start_delay();
  const int last = layout.rounds() + 1;
  if (static_cast<int>(trace.size()) <= last + delay) {
    throw std::invalid_argument("clock check needs rounds 0.." +
                                std::to_string(last + delay));
  }
  bool started = false;
  for (int r = 0; r <= last + delay; ++r) {
    started = started || trace[r].fired(layout.clock[0]);
  }
  if (!started) return ClockCheck::kNeverStarted;

  for (std::size_t i = 0; i < layout.clock.size(); ++i) {
    for (int r = 0; r <= last; ++r) {
      const bool expected =
          i == 0 ? (r == 1 || r == 2) : r == static_cast<int>(i) + 1;
      if (trace[r + delay].fired(layout.clock[i]) != expected) {
        return ClockCheck::kFail;
      }
    }
  }
  return ClockCheck::kPass;
}

ClockCheck ClockTraceCheck(const IndexingRunner& runner, const Bits& x,
                           std::uint64_t seed) {
  const NeuroRamLayout& layout = runner.layout();
  const IndexInstance instance{x, Bits(layout.log_n)};
  const Trace trace =
      runner.simulator().Run(runner.Clamps(instance), layout.rounds() + 1, seed);
  return CheckClockTrace(layout, trace);
}

Bits RunMultiInput(const Network& network, const NeuroRamLayout& layout,
                   std::span<const IndexInstance> instances,
                   std::uint64_t seed) {
  if (!layout.reset) {
    throw std::invalid_argument(
        "multi-input runs need a network built with a reset neuron");
  }
  if (instances.empty()) return {};
  const Simulator simulator(network);
  const CounterRng rng(seed);
  const int window = layout.rounds() + 1;

  std::vector<ClampSpec> clamps;
  for (const IndexInstance& instance : instances) {
    CheckInstance(layout, instance);
    ClampSpec c(layout.x, instance.x);
    for (std::size_t j = 0; j < layout.y.size(); ++j) {
      c.Set(layout.y[j], instance.y[j]);
    }
    clamps.push_back(std::move(c));
  }

  Bits outputs;
  RoundState state = simulator.Initial(clamps[0]);
  RoundState next = state;
  const int total = window * static_cast<int>(instances.size());
  for (int t = 0; t < total; ++t) {
    if (t > 0) {
      simulator.StepInto(state, clamps[t / window], rng, next);
      std::swap(state, next);
    }
    if (t % window == window - 1) outputs.push_back(state.fired(layout.z));
  }
  return outputs;
}

}  // namespace neuroram
