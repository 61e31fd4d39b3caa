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

#include "neuroram/dynamics.h"
#include "neuroram/parallel.h"
#include "neuroram/rng.h"
#include "neuroram/transforms.h"

namespace neuroram {
namespace {

void CheckTrials(std::size_t trials) {
  if (trials < 10000) {
    throw std::invalid_argument("equivalence needs at least 10^4 trials");
  }
}

// Output of network at round t with inputs clamped throughout.
bool RunToRound(const Simulator& simulator, const ClampSpec& clamps, int t,
                NeuronId z, std::uint64_t seed) {
  const CounterRng rng(seed);
  RoundState state = simulator.Initial(clamps);
  RoundState next = state;
  for (int r = 1; r <= t; ++r) {
    simulator.StepInto(state, clamps, rng, next);
    std::swap(state, next);
  }
  return state.fired(z);
}

EquivalenceReport Summarize(int t, const std::vector<std::uint8_t>& a,
                            const std::vector<std::uint8_t>& b) {
  EquivalenceReport report;
  report.rounds = t;
  report.trials = a.size();
  std::size_t a_hits = 0;
  std::size_t b_hits = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    a_hits += a[k];
    b_hits += b[k];
  }
  const double m = static_cast<double>(a.size());
  report.p_snn = static_cast<double>(a_hits) / m;
  report.p_circuit = static_cast<double>(b_hits) / m;
  report.delta = std::abs(report.p_snn - report.p_circuit);
  const double pooled = (report.p_snn + report.p_circuit) / 2;
  report.sigma = std::sqrt(2 * pooled * (1 - pooled) / m);
  report.threshold = 4 * report.sigma;
  return report;
}

}  // namespace

EquivalenceReport DistributionEquivalence(const Network& network,
                                          const Bits& inputs, int t,
                                          std::size_t trials,
                                          std::uint64_t seed) {
  CheckTrials(trials);
  const FeedforwardNetwork ff = Unroll(network, t);
  const ThresholdCircuit base = ThresholdCircuit::FromFeedforward(ff);
  const Simulator simulator(network);
  const ClampSpec clamps(network.inputs(), inputs);
  const NeuronId z = network.outputs().front();

  std::vector<std::uint8_t> snn(trials);
  std::vector<std::uint8_t> circuit(trials);
  ParallelFor(trials, [&](std::size_t k) {
    snn[k] = RunToRound(simulator, clamps, t, z, TrialSeed(seed, 2 * k));
    ThresholdCircuit sampled = base;
    sampled.SampleThresholds(TrialSeed(seed, 2 * k + 1));
    circuit[k] = sampled.Evaluate(inputs);
  });
  return Summarize(t, snn, circuit);
}

EquivalenceReport UnrollingEquivalence(const Network& network,
                                       const Bits& inputs, int t,
                                       std::size_t trials,
                                       std::uint64_t seed) {
  CheckTrials(trials);
  const FeedforwardNetwork ff = Unroll(network, t);
  const Simulator recurrent(network);
  const Simulator unrolled(ff.network);
  const ClampSpec recurrent_clamps(network.inputs(), inputs);
  const ClampSpec unrolled_clamps(ff.inputs, inputs);
  const NeuronId z = network.outputs().front();

  std::vector<std::uint8_t> a(trials);
  std::vector<std::uint8_t> b(trials);
  ParallelFor(trials, [&](std::size_t k) {
    a[k] = RunToRound(recurrent, recurrent_clamps, t, z, TrialSeed(seed, 2 * k));
    b[k] = RunToRound(unrolled, unrolled_clamps, t, ff.output,
                      TrialSeed(seed, 2 * k + 1));
  });
  return Summarize(t, a, b);
}

}  // namespace neuroram
