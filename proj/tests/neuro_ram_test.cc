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
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "neuroram/bits.h"
#include "neuroram/dynamics.h"
#include "neuroram/neuro_ram.h"
#include "neuroram/random_network.h"
#include "neuroram/rng.h"

namespace neuroram {
namespace {

const Rational kLambda(1, 32);

BigInt Pow2(int k) { return BigInt(1) << k; }

TEST(NeuroRamBuildTest, RejectsSizesThatAreNotEvenPowersOfTwo) {
  for (int n : {0, 1, 2, 8, 12, 32, 128}) {
    EXPECT_THROW(BuildNeuroRam(n, false, kLambda), std::invalid_argument)
        << n;
  }
}

TEST(NeuroRamBuildTest, SmallestInstanceHasTheTabulatedWeights) {
  const auto [net, layout] = BuildNeuroRam(4, false, kLambda);
  EXPECT_EQ(*net.weight(layout.x[0], layout.e[0]), 4);
  EXPECT_EQ(net.neuron(layout.e[0]).bias, 19);
  EXPECT_EQ(*net.weight(layout.x[1], layout.e[0]), 2);
  EXPECT_EQ(*net.weight(layout.x[2], layout.e[1]), 4);
  EXPECT_EQ(*net.weight(layout.g[0], layout.e[0]), 16);
  EXPECT_EQ(net.neuron(layout.z).bias, 1);
  EXPECT_EQ(*net.weight(layout.z, layout.z), 2);
}

TEST(NeuroRamBuildTest, DecoderAndClockWiring) {
  const int n = 16;
  const auto [net, layout] = BuildNeuroRam(n, false, kLambda);
  const int s = layout.sqrt_n;
  for (int j = 0; j < s; ++j) {
    const NeuronId tick = layout.clock[5 * j + 2];
    EXPECT_EQ(net.neuron(layout.d1[j]).bias, 2 * s + 3);
    EXPECT_EQ(*net.weight(layout.f[j], layout.d1[j]), 2);
    EXPECT_EQ(*net.weight(tick, layout.d1[j]), 2 * s);
    EXPECT_EQ(*net.weight(layout.d1[j], layout.z), 2);
    EXPECT_EQ(*net.weight(layout.d2[j], layout.d2[j]), 2);
    EXPECT_EQ(*net.weight(tick, layout.d2[j]), 2);
    EXPECT_EQ(net.neuron(layout.d3[j]).polarity, Polarity::kInhibitory);
    EXPECT_EQ(net.neuron(layout.d3[j]).bias, 3);
    EXPECT_FALSE(net.weight(layout.d3[j], layout.d3[j]).has_value());
    EXPECT_EQ(*net.weight(layout.d3_companion[j], layout.d3_companion[j]), 4);
    EXPECT_EQ(*net.weight(layout.d3_companion[j], layout.d3[j]), 4);
    for (int i = 0; i < s; ++i) {
      EXPECT_EQ(*net.weight(layout.d2[j], layout.e[i]), Pow2(s - j - 1));
      EXPECT_EQ(*net.weight(layout.d3[j], layout.e[i]), -Pow2(s - j));
      EXPECT_EQ(*net.weight(layout.e[i], layout.d3[j]), 2);
      EXPECT_EQ(*net.weight(layout.e[i], layout.d3_companion[j]), 2);
    }
  }
  EXPECT_EQ(layout.clock.size(), static_cast<std::size_t>(5 * s + 1));
  EXPECT_EQ(layout.clock_inhibitor.size(), static_cast<std::size_t>(5 * s - 1));
  EXPECT_EQ(*net.weight(layout.clock_inhibitor[0], layout.clock[1]), -2);
  for (NeuronId inhibitor : layout.clock_inhibitor) {
    EXPECT_EQ(*net.weight(inhibitor, layout.clock[0]), -2 * n);
  }
  for (NeuronId x : layout.x) EXPECT_EQ(*net.weight(x, layout.clock[0]), 2);
}

TEST(NeuroRamBuildTest, SelectorBiasesFollowPopcount) {
  const auto [net, layout] = BuildNeuroRam(64, false, kLambda);
  const int half = layout.log_n / 2;
  for (int i = 0; i < layout.sqrt_n; ++i) {
    const Bits code = Bin(i, half);
    EXPECT_EQ(net.neuron(layout.g[i]).bias, 2 * PopCount(code) - 1);
    EXPECT_EQ(net.neuron(layout.f[i]).bias, 2 * PopCount(code) - 1);
    for (int j = 0; j < half; ++j) {
      if (code[j]) {
        EXPECT_EQ(net.weight(layout.y1_relay[j], layout.g[i]), BigInt(2));
        EXPECT_FALSE(net.weight(layout.y1_inhibitor[j], layout.g[i]));
      } else {
        EXPECT_EQ(net.weight(layout.y1_inhibitor[j], layout.g[i]), BigInt(-2));
        EXPECT_FALSE(net.weight(layout.y1_relay[j], layout.g[i]));
      }
    }
  }
}

TEST(NeuroRamBuildTest, NetworksValidateAndManifestCoversEveryNeuron) {
  for (int n : {4, 16, 64}) {
    for (bool reset : {false, true}) {
      const auto [net, layout] = BuildNeuroRam(n, reset, kLambda);
      EXPECT_TRUE(Validate(net).empty()) << n;
      ASSERT_TRUE(net.manifest().has_value());
      std::set<std::uint32_t> seen;
      std::size_t total = 0;
      for (const auto& [role, ids] : *net.manifest()) {
        for (NeuronId id : ids) seen.insert(id.value);
        total += ids.size();
      }
      EXPECT_EQ(seen.size(), net.size()) << n;
      EXPECT_EQ(total, net.size()) << "roles overlap at n=" << n;
      EXPECT_EQ(net.auxiliary_count(), layout.expected_auxiliary_count(false));
      EXPECT_EQ(layout.reset.has_value(), reset);
    }
  }
}

// 2 log n relays + 3 sqrt n selectors and encoders + 10 sqrt n clock
// neurons + 4 sqrt n decoders.
TEST(NeuroRamBuildTest, AuxiliaryCountMatchesHandCount) {
  EXPECT_EQ(BuildNeuroRam(4, false, kLambda).first.auxiliary_count(), 38u);
  EXPECT_EQ(BuildNeuroRam(16, false, kLambda).first.auxiliary_count(), 76u);
  EXPECT_EQ(BuildNeuroRam(64, false, kLambda).first.auxiliary_count(), 148u);
  EXPECT_EQ(BuildNeuroRam(16, true, kLambda).first.auxiliary_count(), 77u);
}

TEST(WeightFactTest, HoldsForBuiltNetworks) {
  for (int n : {4, 16, 64}) {
    const auto [net, layout] = BuildNeuroRam(n, false, kLambda);
    EXPECT_TRUE(CheckWeightFact(net, layout)) << n;
  }
}

TEST(WeightFactTest, FailsWhenADataWeightIsInflated) {
  const auto [net, layout] = BuildNeuroRam(16, false, kLambda);
  NetworkBuilder b = NetworkBuilder::From(net);
  // Bucket 1 alone now carries more than 2^(sqrt n + 2) of excitation.
  b.SetSynapse(layout.x[4], layout.e[1], BigInt(1) << 6);
  EXPECT_FALSE(CheckWeightFact(b.Build(), layout));
}

TEST(EncodingTest, ExamplesFromTheWeightTable) {
  EXPECT_EQ(ExpectedEncodingPotential({1, 0, 0, 0}), 16);
  EXPECT_EQ(ExpectedEncodingPotential({0, 0, 0, 0}), 0);
  EXPECT_EQ(ExpectedEncodingPotential({1, 1}), 6);
}

// Every bucket's contribution to its encoding neuron, read off the built
// network, equals twice the bucket read backwards as a binary number.
TEST(EncodingTest, ExhaustiveOverAllBuckets) {
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
        ASSERT_EQ(sum, 2 * reversed);
        ASSERT_EQ(ExpectedEncodingPotential(bucket), sum);
      }
    }
  }
}

TEST(EncodingTest, SelectedBucketWithLeadingBitHasUnitPotential) {
  const auto [net, layout] = BuildNeuroRam(16, false, kLambda);
  const int i = 2;
  RoundState prev(net.size(), 0);
  prev.set(layout.g[i], true);
  prev.set(layout.x[i * 4], true);
  EXPECT_EQ(Potential(net, prev, layout.e[i]), 1);
}

TEST(IndexingTest, ReadsTheAddressedBit) {
  const IndexingRunner runner(4, kLambda);
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ok += runner.Solve({{1, 0, 0, 0}, {0, 0}}, seed);
  }
  EXPECT_GE(ok, 99);
}

TEST(IndexingTest, AllZeroDataGivesZero) {
  const IndexingRunner runner(4, kLambda);
  for (std::uint64_t y = 0; y < 4; ++y) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      EXPECT_FALSE(runner.Solve({Bits(4, false), Bin(y, 2)}, seed));
    }
  }
}

TEST(IndexingTest, GlobalIndexSplitsIntoBucketAndPosition) {
  const auto [net, layout] = BuildNeuroRam(16, false, kLambda);
  // Y1 = bin(1), Y2 = bin(2): bucket 1, position 2.
  EXPECT_EQ(layout.Target({1, 0, 0, 1}), 6u);
  EXPECT_EQ(layout.Target({0, 0, 0, 0}), 0u);
  EXPECT_EQ(layout.Target({1, 1, 1, 1}), 15u);
}

TEST(IndexingTest, SixteenBitsSingleOneAtFive) {
  const IndexingRunner runner(16, kLambda);
  Bits x(16, false);
  x[5] = true;
  // 5 = 4 * 1 + 1.
  const Bits y = {1, 0, 1, 0};
  ASSERT_EQ(runner.layout().Target(y), 5u);
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) ok += runner.Solve({x, y}, seed);
  EXPECT_GE(ok, 99);
}

TEST(IndexingTest, ExhaustiveAtFourBits) {
  const IndexingRunner runner(4, kLambda);
  for (std::uint64_t xv = 0; xv < 16; ++xv) {
    for (std::uint64_t yv = 0; yv < 4; ++yv) {
      const IndexInstance instance{Bin(xv, 4), Bin(yv, 2)};
      const bool truth = GroundTruth(runner.layout(), instance);
      int ok = 0;
      for (std::uint64_t k = 0; k < 100; ++k) {
        ok += runner.Solve(instance, TrialSeed(xv * 4 + yv, k)) == truth;
      }
      EXPECT_GE(ok, 99) << FormatBits(instance.x) << " " << yv;
    }
  }
}

TEST(IndexingTest, RejectsMalformedInstances) {
  const IndexingRunner runner(4, kLambda);
  EXPECT_THROW(runner.Solve({Bits(3, false), Bits(2, false)}, 0),
               std::invalid_argument);
  EXPECT_THROW(runner.Solve({Bits(4, false), Bits(3, false)}, 0),
               std::invalid_argument);
}

TEST(IndexingTest, InitialRoundIsSilent) {
  const IndexingRunner runner(16, kLambda);
  const IndexInstance instance{RandomBits(16, 3), RandomBits(4, 4)};
  const Trace trace = runner.RunTrace(instance, 9);
  for (std::uint32_t id = 0; id < runner.network().size(); ++id) {
    if (runner.network().neuron(NeuronId{id}).kind != NeuronKind::kInput) {
      EXPECT_FALSE(trace[0].fired(NeuronId{id}));
    }
  }
}

TEST(IndexingTest, OutputPersistsOnceFired) {
  const IndexingRunner runner(16, kLambda);
  int persistent = 0;
  int fired = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Bits x = RandomBits(16, TrialSeed(5, k));
    const Bits y = RandomBits(4, TrialSeed(6, k));
    x[runner.layout().Target(y)] = true;
    const Trace trace = runner.RunTrace({x, y}, k);
    int first = -1;
    for (std::size_t t = 0; t < trace.size(); ++t) {
      if (trace[t].fired(runner.layout().z)) {
        first = static_cast<int>(t);
        break;
      }
    }
    if (first < 0) continue;
    ++fired;
    bool stays = true;
    for (std::size_t t = first; t < trace.size(); ++t) {
      stays = stays && trace[t].fired(runner.layout().z);
    }
    persistent += stays;
  }
  EXPECT_GE(fired, 99);
  EXPECT_GE(persistent, 99);
}

TEST(ClockTest, FiresOneNeuronPerRound) {
  for (int n : {4, 16}) {
    const IndexingRunner runner(n, kLambda);
    int pass = 0;
    for (std::uint64_t k = 0; k < 100; ++k) {
      Bits x = RandomBits(n, TrialSeed(1, k));
      x[k % n] = true;
      pass += ClockTraceCheck(runner, x, k) == ClockCheck::kPass;
    }
    EXPECT_GE(pass, 99) << n;
  }
}

TEST(ClockTest, SilentInputsNeverStartTheClock) {
  const IndexingRunner runner(4, kLambda);
  EXPECT_EQ(ClockTraceCheck(runner, Bits(4, false), 0),
            ClockCheck::kNeverStarted);
}

TEST(ClockTest, DetectsAShiftedPattern) {
  const IndexingRunner runner(4, kLambda);
  const IndexInstance instance{{1, 0, 0, 0}, {0, 0}};
  Trace trace = runner.simulator().Run(runner.Clamps(instance),
                                       runner.layout().rounds() + 1, 0);
  ASSERT_EQ(CheckClockTrace(runner.layout(), trace), ClockCheck::kPass);
  trace[4].set(runner.layout().clock[1], true);
  EXPECT_EQ(CheckClockTrace(runner.layout(), trace), ClockCheck::kFail);
}

// With Y1 = bin(i), no other encoding neuron fires from round 3 on.
TEST(BucketSelectionTest, OnlyTheSelectedBucketFires) {
  const IndexingRunner runner(16, kLambda);
  const NeuroRamLayout& layout = runner.layout();
  for (int i = 0; i < layout.sqrt_n; ++i) {
    int clean = 0;
    for (std::uint64_t k = 0; k < 100; ++k) {
      const Bits y1 = Bin(i, 2);
      const Bits y2 = RandomBits(2, TrialSeed(7, k));
      const IndexInstance instance{RandomBits(16, TrialSeed(8, k)),
                                   {y1[0], y1[1], y2[0], y2[1]}};
      const Trace trace = runner.RunTrace(instance, TrialSeed(i, k));
      bool ok = true;
      for (std::size_t t = 3; t < trace.size(); ++t) {
        for (int other = 0; other < layout.sqrt_n; ++other) {
          if (other != i && trace[t].fired(layout.e[other])) ok = false;
        }
      }
      clean += ok;
    }
    EXPECT_GE(clean, 99) << "bucket " << i;
  }
}

// In a correct run, the selected encoding neuron's potential when reading
// bit j is 1 - 2^(s-j) + sum over j' >= j of X[i s + j'] 2^(s-j').
TEST(DecodingTest, PotentialFollowsTheReadingRecurrence) {
  const IndexingRunner runner(16, kLambda);
  const NeuroRamLayout& layout = runner.layout();
  const int s = layout.sqrt_n;
  int checked = 0;
  for (std::uint64_t k = 0; k < 50; ++k) {
    const IndexInstance instance{RandomBits(16, TrialSeed(21, k)),
                                 RandomBits(4, TrialSeed(22, k))};
    const Trace trace = runner.RunTrace(instance, k);
    if (trace.back().fired(layout.z) != GroundTruth(layout, instance)) continue;
    const int i = static_cast<int>(layout.Target(instance.y)) / s;
    for (int j = 0; j < s; ++j) {
      BigInt expected = 1 - Pow2(s - j);
      for (int jj = j; jj < s; ++jj) {
        if (instance.x[i * s + jj]) expected += Pow2(s - jj);
      }
      EXPECT_EQ(runner.simulator().Potential(trace[5 * j + 2], layout.e[i]),
                expected)
          << "j=" << j;
    }
    ++checked;
  }
  EXPECT_GE(checked, 49);
}

TEST(MultiInputTest, AnswersEachWindow) {
  const auto [net, layout] = BuildNeuroRam(4, true, kLambda);
  // Index = 2 * dec(Y1) + dec(Y2): y = (0, 1) addresses x_1, y = (1, 0) x_2.
  const std::vector<IndexInstance> instances = {{{0, 1, 0, 0}, {0, 1}},
                                                {{0, 1, 0, 0}, {1, 0}}};
  ASSERT_TRUE(GroundTruth(layout, instances[0]));
  ASSERT_FALSE(GroundTruth(layout, instances[1]));
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ok += RunMultiInput(net, layout, instances, seed) == Bits{1, 0};
  }
  EXPECT_GE(ok, 98);
}

TEST(MultiInputTest, SameInstanceTwiceGivesSameAnswerTwice) {
  const auto [net, layout] = BuildNeuroRam(4, true, kLambda);
  const IndexInstance instance{{0, 0, 1, 1}, {1, 1}};
  const std::vector<IndexInstance> instances = {instance, instance};
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ok += RunMultiInput(net, layout, instances, seed) == Bits{1, 1};
  }
  EXPECT_GE(ok, 98);
}

TEST(MultiInputTest, ThreeRandomInstancesAtSixteenBits) {
  const auto [net, layout] = BuildNeuroRam(16, true, kLambda);
  int ok = 0;
  int total = 0;
  for (std::uint64_t k = 0; k < 50; ++k) {
    std::vector<IndexInstance> instances;
    Bits truth;
    for (int w = 0; w < 3; ++w) {
      instances.push_back({RandomBits(16, TrialSeed(k, 2 * w)),
                           RandomBits(4, TrialSeed(k, 2 * w + 1))});
      truth.push_back(GroundTruth(layout, instances.back()));
    }
    const Bits out = RunMultiInput(net, layout, instances, k);
    for (int w = 0; w < 3; ++w) ok += out[w] == truth[w];
    total += 3;
  }
  EXPECT_GE(static_cast<double>(ok) / total, 0.98);
}

TEST(MultiInputTest, RequiresAResetNeuron) {
  const auto [net, layout] = BuildNeuroRam(4, false, kLambda);
  const std::vector<IndexInstance> instances = {{{0, 1, 0, 0}, {1, 0}}};
  EXPECT_THROW(RunMultiInput(net, layout, instances, 0), std::invalid_argument);
}

}  // namespace
}  // namespace neuroram
