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

#ifndef NEURORAM_SIMILARITY_H_
#define NEURORAM_SIMILARITY_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "neuroram/bits.h"
#include "neuroram/dynamics.h"
#include "neuroram/network.h"
#include "neuroram/neuro_ram.h"
#include "neuroram/rational.h"

namespace neuroram {

// K = ceil(c ln(n) / eps) random positions. Throws std::invalid_argument
// unless 0 < eps <= 1, c >= 1 and n >= 2.
int SampleCount(int n, double eps, double c);

// (1 - eps)^K, the probability that K uniform positions all miss an
// eps-fraction of differing positions, next to the n^-c target it must meet.
struct SamplingBound {
  double miss_probability;
  double target;
  bool holds() const { return miss_probability <= target; }
};
SamplingBound ComputeSamplingBound(int n, double eps, double c);

// Approximate-equality tester: K index generators, each shared by a pair of
// indexing networks reading X1 and X2, and a comparator per pair.
struct SimilarityLayout {
  int n = 0;
  double eps = 0;
  double c = 0;
  int K = 0;

  std::vector<NeuronId> x1;
  std::vector<NeuronId> x2;
  // index[k]: log n self-exciting neurons (bias 0, self-loop 2) that sample a
  // random index in round 1 and hold it while the lock fires.
  std::vector<std::vector<NeuronId>> index;
  std::vector<NeuroRamLayout> ram1;  // S_{1,k}, reads X1
  std::vector<NeuroRamLayout> ram2;  // S_{2,k}, reads X2
  NeuronId lock;                     // inhibitory, fires while any input does
  std::vector<NeuronId> any_output;  // f_{1,k}: fires if either output fires
  std::vector<NeuronId> both_outputs;  // f_{2,k}: inhibitory, fires if both do
  NeuronId z;

  // The index settles in round 1, so the pair networks start one round late
  // and their outputs are valid from round 5 sqrt(n) + 1; comparators and z
  // add one round each.
  int output_round() const { return 5 * ram1.front().sqrt_n + 3; }
};

std::pair<Network, SimilarityLayout> BuildSimilarity(int n, double eps,
                                                     double c,
                                                     Rational temperature);

class SimilarityRunner {
 public:
  SimilarityRunner(int n, double eps, double c, Rational temperature);
  // Wraps an existing (possibly modified) similarity network.
  SimilarityRunner(Network network, SimilarityLayout layout);
  SimilarityRunner(const SimilarityRunner&) = delete;
  SimilarityRunner& operator=(const SimilarityRunner&) = delete;

  const Network& network() const { return network_; }
  const SimilarityLayout& layout() const { return layout_; }
  const Simulator& simulator() const { return simulator_; }

  ClampSpec Clamps(const Bits& x1, const Bits& x2) const;
  Trace RunTrace(const Bits& x1, const Bits& x2, std::uint64_t seed,
                 int rounds) const;
  // z at output_round(): 1 means "far", 0 means "equal".
  bool Test(const Bits& x1, const Bits& x2, std::uint64_t seed) const;
  // The K data positions the index generators lock onto (read in round 2).
  std::vector<std::size_t> SampledPositions(const Bits& x1, const Bits& x2,
                                            std::uint64_t seed) const;

 private:
  explicit SimilarityRunner(std::pair<Network, SimilarityLayout> built);

  Network network_;
  SimilarityLayout layout_;
  Simulator simulator_;
};

bool TestSimilarity(int n, double eps, const Bits& x1, const Bits& x2,
                    std::uint64_t seed, double c, Rational temperature);

enum class LockCheck { kLocked, kUnlocked, kLockInactive };

// kLocked iff each index group's pattern is constant from round 2 through
// the last round of the trace; kLockInactive if the lock never fired.
LockCheck LockedIndexCheck(const Trace& trace, const SimilarityLayout& layout);

}  // namespace neuroram

#endif  // NEURORAM_SIMILARITY_H_
