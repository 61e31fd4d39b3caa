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

// Acceptance checks for the toolkit. Prints one PASS/FAIL line per criterion
// and exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "neuroram/bits.h"
#include "neuroram/dynamics.h"
#include "neuroram/neuro_ram.h"
#include "neuroram/parallel.h"
#include "neuroram/random_network.h"
#include "neuroram/rng.h"
#include "neuroram/similarity.h"
#include "neuroram/transforms.h"
#include "neuroram/vc.h"
#include "oracles.h"

namespace neuroram {
namespace {

const Rational kLambda(1, 32);

struct Outcome {
  bool passed = false;
  std::string detail;
};

class Stopwatch {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string Format(const char* fmt, double a) {
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, fmt, a);
  return buffer;
}

// Counts trials (in parallel) for which ok(k) holds.
std::size_t CountTrue(std::size_t trials,
                      const std::function<bool(std::size_t)>& ok) {
  std::vector<std::uint8_t> result(trials);
  ParallelFor(trials, [&](std::size_t k) { result[k] = ok(k); });
  std::size_t total = 0;
  for (std::uint8_t r : result) total += r;
  return total;
}

Outcome CheckIndexingCorrectness() {
  std::string detail;
  bool passed = true;
  {
    const Stopwatch watch;
    const IndexingRunner runner(4, kLambda);
    double worst = 1;
    for (std::uint64_t xv = 0; xv < 16; ++xv) {
      for (std::uint64_t yv = 0; yv < 4; ++yv) {
        const IndexInstance instance{Bin(xv, 4), Bin(yv, 2)};
        const bool truth = GroundTruth(runner.layout(), instance);
        const std::uint64_t root = TrialSeed(1001, xv * 4 + yv);
        const std::size_t ok = CountTrue(100, [&](std::size_t k) {
          return runner.Solve(instance, TrialSeed(root, k)) == truth;
        });
        worst = std::min(worst, ok / 100.0);
      }
    }
    const double seconds = watch.Seconds();
    passed = passed && worst >= 0.99 && seconds < 30;
    detail += "n=4: 64 combos x 100 trials, min rate " +
              Format("%.3f", worst) + ", " + Format("%.2fs", seconds);
  }
  {
    const Stopwatch watch;
    const IndexingRunner runner(16, kLambda);
    std::size_t ok = 0;
    double worst = 1;
    for (std::uint64_t c = 0; c < 200; ++c) {
      const std::uint64_t root = TrialSeed(1002, c);
      const IndexInstance instance{RandomBits(16, TrialSeed(root, 0)),
                                   RandomBits(4, TrialSeed(root, 1))};
      const bool truth = GroundTruth(runner.layout(), instance);
      const std::size_t hits = CountTrue(50, [&](std::size_t k) {
        return runner.Solve(instance, TrialSeed(root, k + 2)) == truth;
      });
      ok += hits;
      worst = std::min(worst, hits / 50.0);
    }
    const double rate = ok / 10000.0;
    const double seconds = watch.Seconds();
    passed = passed && rate >= 0.99 && seconds < 120;
    detail += "; n=16: 200 combos x 50 trials, rate " + Format("%.4f", rate) +
              " (min per combo " + Format("%.2f", worst) + "), " +
              Format("%.2fs", seconds);
  }
  return {passed, detail};
}

Outcome CheckClockMechanism() {
  bool passed = true;
  std::string detail;
  for (int n : {4, 16}) {
    const IndexingRunner runner(n, kLambda);
    const std::size_t ok = CountTrue(100, [&](std::size_t k) {
      Bits x = RandomBits(n, TrialSeed(2000 + n, k));
      x[k % n] = true;
      return ClockTraceCheck(runner, x, TrialSeed(2100 + n, k)) ==
             ClockCheck::kPass;
    });
    passed = passed && ok >= 99;
    detail += (detail.empty() ? "" : "; ") + std::string("n=") +
              std::to_string(n) + ": " + std::to_string(ok) + "/100 exact";
  }
  return {passed, detail};
}

Outcome CheckBucketSelection() {
  const IndexingRunner runner(16, kLambda);
  const NeuroRamLayout& layout = runner.layout();
  bool passed = true;
  std::string detail;
  for (int i = 0; i < layout.sqrt_n; ++i) {
    const std::size_t clean = CountTrue(100, [&](std::size_t k) {
      const Bits y1 = Bin(i, 2);
      const Bits y2 = RandomBits(2, TrialSeed(3000 + i, k));
      const IndexInstance instance{RandomBits(16, TrialSeed(3100 + i, k)),
                                   {y1[0], y1[1], y2[0], y2[1]}};
      const Trace trace = runner.RunTrace(instance, TrialSeed(3200 + i, k));
      for (std::size_t t = 3; t < trace.size(); ++t) {
        for (int other = 0; other < layout.sqrt_n; ++other) {
          if (other != i && trace[t].fired(layout.e[other])) return false;
        }
      }
      return true;
    });
    passed = passed && clean >= 99;
    detail += (i ? ", " : "") + std::string("Y1=bin(") + std::to_string(i) +
              ") " + std::to_string(clean) + "/100";
  }
  return {passed, detail};
}

Outcome CheckEncodingIdentity() {
  bool passed = true;
  std::size_t checked = 0;
  for (int n : {4, 16}) {
    const auto [net, layout] = BuildNeuroRam(n, false, kLambda);
    const int s = layout.sqrt_n;
    for (int i = 0; i < s; ++i) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << s); ++v) {
        const Bits bucket = Bin(v, s);
        BigInt sum = 0;
        for (int j = 0; j < s; ++j) {
          if (bucket[j]) sum += *net.weight(layout.x[i * s + j], layout.e[i]);
        }
        std::uint64_t reversed = 0;
        for (int j = 0; j < s; ++j) reversed = 2 * reversed + bucket[j];
        passed = passed && sum == 2 * reversed &&
                 ExpectedEncodingPotential(bucket) == sum;
        ++checked;
      }
    }
  }
  return {passed, std::to_string(checked) +
                      " (bucket, pattern) pairs for sqrt(n) in {2,4}, exact"};
}

Network RandomNet(int inputs, int auxiliary, std::uint64_t seed) {
  RandomNetworkOptions options;
  options.inputs = inputs;
  options.auxiliary = auxiliary;
  options.temperature = Rational(1, 4);
  return RandomNetwork(options, seed);
}

// First random network from seed upward whose output fires at round t with
// probability in [0.2, 0.8] but away from 1/2, so that the comparison is
// neither between two constants nor a lone fair coin at the output.
Network NonDegenerateNet(int inputs, int auxiliary, const Bits& bits, int t,
                         std::uint64_t seed) {
  for (;; ++seed) {
    Network net = RandomNet(inputs, auxiliary, seed);
    const double p = oracle::ExactOutputProbability(net, bits, t);
    if (p >= 0.2 && p <= 0.8 && std::abs(p - 0.5) > 0.05) return net;
  }
}

Outcome CheckUnrollingEquivalence() {
  const Bits inputs = {1, 0, 1};
  const int t = 4;
  const Network net = NonDegenerateNet(3, 3, inputs, t, 5005);
  const FeedforwardNetwork ff = Unroll(net, t);
  const EquivalenceReport report =
      UnrollingEquivalence(net, inputs, t, 100000, 5006);
  const double exact = oracle::ExactOutputProbability(net, inputs, t);
  const std::size_t aux = ff.network.auxiliary_count();
  const bool passed = report.delta <= 0.01 && aux == 12;
  return {passed, "p_recurrent " + Format("%.4f", report.p_snn) +
                      ", p_unrolled " + Format("%.4f", report.p_circuit) +
                      ", exact " + Format("%.4f", exact) + ", |delta| " +
                      Format("%.4f", report.delta) + ", auxiliary " +
                      std::to_string(aux) + " (expect 12)"};
}

Outcome CheckDerandomizationEquivalence() {
  bool passed = true;
  std::string detail;
  {
    // Single gate, weighted input sum W = 2 against bias 2 + 1/4.
    const double lambda = 0.25;
    ThresholdGate gate{NeuronId{1}, "g", 2.25, 2.25, {{NeuronId{0}, 2.0}}};
    const ThresholdCircuit base(2, {NeuronId{0}}, {gate}, NeuronId{1}, lambda);
    const std::size_t fired = CountTrue(100000, [&](std::size_t k) {
      ThresholdCircuit circuit = base;
      circuit.SampleThresholds(TrialSeed(6000, k));
      return circuit.Evaluate({1});
    });
    const double expected = oracle::Sigmoid((2.0 - 2.25) / lambda);
    const double got = fired / 100000.0;
    passed = passed && std::abs(got - expected) <= 0.01;
    detail += "single gate " + Format("%.4f", got) + " vs sigmoid " +
              Format("%.4f", expected);
  }
  {
    const Bits inputs = {0, 1, 1};
    const Network net = NonDegenerateNet(3, 2, inputs, 3, 6001);
    const EquivalenceReport report =
        DistributionEquivalence(net, inputs, 3, 100000, 6002);
    passed = passed && report.delta <= 0.01;
    detail += "; l=2 t=3 net p " + Format("%.4f", report.p_snn) + " vs " +
              Format("%.4f", report.p_circuit) + " |delta| " +
              Format("%.4f", report.delta);
  }
  {
    const auto [net, layout] = BuildNeuroRam(4, false, kLambda);
    const EquivalenceReport report = DistributionEquivalence(
        net, {1, 0, 1, 1, 1, 0}, layout.rounds(), 100000, 6003);
    passed = passed && report.delta <= 0.01;
    detail += "; neuro-RAM n=4 p " + Format("%.4f", report.p_snn) + " vs " +
              Format("%.4f", report.p_circuit) + " |delta| " +
              Format("%.4f", report.delta);
  }
  return {passed, detail};
}

Outcome CheckSimilarityTesting() {
  const Stopwatch watch;
  const SimilarityRunner runner(16, 0.25, 2, kLambda);
  const std::size_t zeros = CountTrue(100, [&](std::size_t k) {
    Bits x = RandomBits(16, TrialSeed(7000, k));
    x[k % 16] = true;
    return !runner.Test(x, x, TrialSeed(7001, k));
  });
  const std::size_t ones = CountTrue(100, [&](std::size_t k) {
    const Bits x = RandomBits(16, TrialSeed(7002, k));
    std::mt19937_64 gen(TrialSeed(7003, k));
    std::vector<int> order(16);
    for (int i = 0; i < 16; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), gen);
    Bits y = x;
    for (int i = 0; i < 4; ++i) y[order[i]] = !y[order[i]];
    return runner.Test(x, y, TrialSeed(7004, k));
  });
  const double seconds = watch.Seconds();
  const bool passed = runner.layout().K == 23 && zeros >= 99 && ones >= 99 &&
                      seconds < 300;
  return {passed, "K=" + std::to_string(runner.layout().K) + ", equal->0 " +
                      std::to_string(zeros) + "/100, distance 4->1 " +
                      std::to_string(ones) + "/100, output read at round " +
                      std::to_string(runner.layout().output_round()) + ", " +
                      Format("%.2fs", seconds)};
}

Outcome CheckSamplingBound() {
  const SimilarityRunner runner(16, 0.25, 2, kLambda);
  const Bits x1 = RandomBits(16, 8000);
  Bits x2 = x1;
  for (int i : {1, 6, 11, 12}) x2[i] = !x2[i];
  constexpr std::size_t kDraws = 10000;
  const std::size_t misses = CountTrue(kDraws, [&](std::size_t k) {
    for (std::size_t p : runner.SampledPositions(x1, x2, TrialSeed(8001, k))) {
      if (x1[p] != x2[p]) return false;
    }
    return true;
  });
  const double bound = 3 * std::pow(0.75, runner.layout().K);
  const double rate = static_cast<double>(misses) / kDraws;
  return {rate <= bound, "miss rate " + Format("%.5f", rate) +
                             " vs 3(1-eps)^K = " + Format("%.5f", bound)};
}

Outcome CheckVcCounting() {
  std::mt19937_64 gen(9000);
  int matches = 0;
  bool bounds = true;
  bool single = true;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = std::uniform_int_distribution<int>(1, 4)(gen);
    const int m = std::uniform_int_distribution<int>(1, 3)(gen);
    const int z =
        std::uniform_int_distribution<int>(0, std::min(6, 1 << d))(gen);
    const auto arch = RandomArchitecture(d, m, gen());
    const auto samples = RandomSamples(d, z, gen());
    const DichotomyCount count = CountDichotomies(arch, samples);
    matches += count.dichotomies == oracle::GridOracleCount(arch, samples);
    if (z >= 2 && m >= 2) {
      bounds = bounds && count.dichotomies <= std::pow(z, m);
    }
    for (std::uint64_t c : count.per_gate) single = single && c <= z + 1u;
  }
  return {matches == 50 && bounds && single,
          std::to_string(matches) + "/50 equal to grid oracle, z^m bound " +
              (bounds ? "holds" : "violated") + ", per-gate <= z+1 " +
              (single ? "holds" : "violated")};
}

Outcome CheckModelSanity() {
  bool half = true;
  for (std::int64_t q : {1, 2, 3, 32, 1000}) {
    half = half && FiringProbability(0, Rational(1, q)) == 0.5 &&
           FiringProbability(0, Rational(q, 1)) == 0.5;
  }
  // 10^4 potentials at lambda = 100 span pot / lambda in [-50, 50): the
  // probability never decreases, and strictly increases while |pot / lambda|
  // <= 30. Beyond that, neighbouring values near 1 can round to the same
  // double.
  bool monotone = true;
  double previous = 0;
  for (int pot = -5000; pot < 5000; ++pot) {
    const double p = FiringProbability(pot, Rational(100, 1));
    const bool saturated = std::abs(pot) > 3000;
    monotone = monotone && (saturated ? p >= previous : p > previous);
    previous = p;
  }
  bool deterministic = true;
  for (std::uint64_t k = 0; k < 100; ++k) {
    RandomNetworkOptions options;
    options.auxiliary = 2 + static_cast<int>(k % 6);
    options.temperature = Rational(1, 2);
    const Network net = RandomNetwork(options, TrialSeed(10000, k));
    const ClampSpec clamps(net.inputs(), RandomBits(3, k));
    deterministic = deterministic &&
                    neuroram::Run(net, clamps, 20, k) == neuroram::Run(net, clamps, 20, k);
  }
  return {half && monotone && deterministic,
          std::string("p(0)=0.5 ") + (half ? "exact" : "WRONG") +
              ", 10^4-point monotone " + (monotone ? "yes" : "NO") +
              ", 100 nets deterministic " + (deterministic ? "yes" : "NO")};
}

}  // namespace
}  // namespace neuroram

int main() {
  using neuroram::Outcome;
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"indexing correctness", neuroram::CheckIndexingCorrectness},
      {"clock mechanism", neuroram::CheckClockMechanism},
      {"bucket selection", neuroram::CheckBucketSelection},
      {"encoding identity", neuroram::CheckEncodingIdentity},
      {"unrolling equivalence", neuroram::CheckUnrollingEquivalence},
      {"derandomization equivalence", neuroram::CheckDerandomizationEquivalence},
      {"similarity testing", neuroram::CheckSimilarityTesting},
      {"sampling bound", neuroram::CheckSamplingBound},
      {"VC counting", neuroram::CheckVcCounting},
      {"model sanity", neuroram::CheckModelSanity},
  };
  int failures = 0;
  int index = 1;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.passed;
    std::printf("%s criterion %d (%s): %s\n", outcome.passed ? "PASS" : "FAIL",
                index++, c.name, outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
