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

#include "neuroram/similarity.h"

#include <cmath>
#include <stdexcept>

namespace neuroram {

int SampleCount(int n, double eps, double c) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("eps must be in (0, 1]");
  }
  if (!(c >= 1.0)) throw std::invalid_argument("c must be >= 1");
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  const double k = c * std::log(static_cast<double>(n)) / eps;
  return static_cast<int>(std::ceil(k - 1e-9));
}

SamplingBound ComputeSamplingBound(int n, double eps, double c) {
  const int k = SampleCount(n, eps, c);
  return {std::pow(1.0 - eps, k), std::pow(static_cast<double>(n), -c)};
}

std::pair<Network, SimilarityLayout> BuildSimilarity(int n, double eps,
                                                     double c,
                                                     Rational temperature) {
  CheckNeuroRamSize(n);
  SimilarityLayout L;
  L.n = n;
  L.eps = eps;
  L.c = c;
  L.K = SampleCount(n, eps, c);
  const int log_n = static_cast<int>(std::log2(n));

  NetworkBuilder b(temperature);
  for (int i = 0; i < n; ++i) {
    L.x1.push_back(b.AddInput("x1[" + std::to_string(i) + "]"));
  }
  for (int i = 0; i < n; ++i) {
    L.x2.push_back(b.AddInput("x2[" + std::to_string(i) + "]"));
  }
  L.lock = b.AddNeuron("lock", NeuronKind::kAuxiliary, Polarity::kInhibitory, 1);
  for (NeuronId x : L.x1) b.AddSynapse(x, L.lock, 2);
  for (NeuronId x : L.x2) b.AddSynapse(x, L.lock, 2);
  L.z = b.AddNeuron("z", NeuronKind::kOutput, Polarity::kExcitatory, 1);

  NeuroRamOptions options;
  options.delayed_start = true;
  options.output_kind = NeuronKind::kAuxiliary;
  for (int k = 0; k < L.K; ++k) {
    const std::string tag = "[" + std::to_string(k) + "]";
    std::vector<NeuronId> index;
    for (int j = 0; j < log_n; ++j) {
      const NeuronId y = b.AddNeuron(
          "Y" + tag + "[" + std::to_string(j) + "]", NeuronKind::kAuxiliary,
          Polarity::kExcitatory, 0);
      b.AddSynapse(y, y, 2);
      b.AddSynapse(L.lock, y, -1);
      b.AddRole("Y" + tag, y);
      index.push_back(y);
    }
    options.prefix = "S1" + tag + "/";
    L.ram1.push_back(AddNeuroRam(b, L.x1, index, options));
    options.prefix = "S2" + tag + "/";
    L.ram2.push_back(AddNeuroRam(b, L.x2, index, options));

    const NeuronId any = b.AddNeuron("f1" + tag, NeuronKind::kAuxiliary,
                                     Polarity::kExcitatory, 1);
    const NeuronId both = b.AddNeuron("f2" + tag, NeuronKind::kAuxiliary,
                                      Polarity::kInhibitory, 3);
    for (NeuronId out : {L.ram1.back().z, L.ram2.back().z}) {
      b.AddSynapse(out, any, 2);
      b.AddSynapse(out, both, 2);
    }
    b.AddSynapse(any, L.z, 2);
    b.AddSynapse(both, L.z, -2);
    L.index.push_back(std::move(index));
    L.any_output.push_back(any);
    L.both_outputs.push_back(both);
  }

  for (NeuronId x : L.x1) b.AddRole("x1", x);
  for (NeuronId x : L.x2) b.AddRole("x2", x);
  b.AddRole("lock", L.lock);
  b.AddRole("z", L.z);
  for (int k = 0; k < L.K; ++k) {
    b.AddRole("f1", L.any_output[k]);
    b.AddRole("f2", L.both_outputs[k]);
  }
  return {b.Build(), std::move(L)};
}

SimilarityRunner::SimilarityRunner(int n, double eps, double c,
                                   Rational temperature)
    : SimilarityRunner(BuildSimilarity(n, eps, c, temperature)) {}

SimilarityRunner::SimilarityRunner(Network network, SimilarityLayout layout)
    : network_(std::move(network)),
      layout_(std::move(layout)),
      simulator_(network_) {}

SimilarityRunner::SimilarityRunner(
    std::pair<Network, SimilarityLayout> built)
    : SimilarityRunner(std::move(built.first), std::move(built.second)) {}

ClampSpec SimilarityRunner::Clamps(const Bits& x1, const Bits& x2) const {
  if (static_cast<int>(x1.size()) != layout_.n ||
      static_cast<int>(x2.size()) != layout_.n) {
    throw std::invalid_argument("similarity inputs must have " +
                                std::to_string(layout_.n) + " bits each");
  }
  ClampSpec clamps(layout_.x1, x1);
  for (std::size_t i = 0; i < x2.size(); ++i) clamps.Set(layout_.x2[i], x2[i]);
  return clamps;
}

Trace SimilarityRunner::RunTrace(const Bits& x1, const Bits& x2,
                                 std::uint64_t seed, int rounds) const {
  return simulator_.Run(Clamps(x1, x2), rounds, seed);
}

bool SimilarityRunner::Test(const Bits& x1, const Bits& x2,
                            std::uint64_t seed) const {
  const ClampSpec clamps = Clamps(x1, x2);
  const CounterRng rng(seed);
  RoundState state = simulator_.Initial(clamps);
  RoundState next = state;
  for (int t = 1; t <= layout_.output_round(); ++t) {
    simulator_.StepInto(state, clamps, rng, next);
    std::swap(state, next);
  }
  return state.fired(layout_.z);
}

std::vector<std::size_t> SimilarityRunner::SampledPositions(
    const Bits& x1, const Bits& x2, std::uint64_t seed) const {
  const Trace trace = RunTrace(x1, x2, seed, 2);
  std::vector<std::size_t> positions;
  for (int k = 0; k < layout_.K; ++k) {
    positions.push_back(
        layout_.ram1[k].Target(trace[2].Pattern(layout_.index[k])));
  }
  return positions;
}

bool TestSimilarity(int n, double eps, const Bits& x1, const Bits& x2,
                    std::uint64_t seed, double c, Rational temperature) {
  return SimilarityRunner(n, eps, c, temperature).Test(x1, x2, seed);
}

LockCheck LockedIndexCheck(const Trace& trace, const SimilarityLayout& layout) {
  bool lock_fired = false;
  for (const RoundState& state : trace) {
    lock_fired = lock_fired || state.fired(layout.lock);
  }
  if (!lock_fired) return LockCheck::kLockInactive;
  if (trace.size() < 3) {
    throw std::invalid_argument("lock check needs rounds 0..2 at least");
  }
  for (const auto& group : layout.index) {
    const Bits locked = trace[2].Pattern(group);
    for (std::size_t t = 3; t < trace.size(); ++t) {
      if (trace[t].Pattern(group) != locked) return LockCheck::kUnlocked;
    }
  }
  return LockCheck::kLocked;
}

}  // namespace neuroram
