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

#ifndef NEURORAM_NEURO_RAM_H_
#define NEURORAM_NEURO_RAM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "neuroram/bits.h"
#include "neuroram/dynamics.h"
#include "neuroram/network.h"
#include "neuroram/rational.h"

namespace neuroram {

// Role map of one indexing ("neuro-RAM") network.
//
// The n data inputs are split into sqrt(n) buckets of sqrt(n) bits. Encoding
// neuron e_i carries bucket i in its potential; the first half of the index
// (Y1) selects a bucket through g_i, the second half (Y2) selects a position
// through f_j, and a clock chain paces a five-round decoding step per
// position. The global index is sqrt(n) * dec(Y1) + dec(Y2).
struct NeuroRamLayout {
  int n = 0;
  int sqrt_n = 0;
  int log_n = 0;

  std::vector<NeuronId> x;  // n data inputs
  std::vector<NeuronId> y;  // log n index inputs; Y1 first, then Y2

  std::vector<NeuronId> y1_relay;      // y_{j,1}, excitatory
  std::vector<NeuronId> y1_inhibitor;  // y_{j,1'}
  std::vector<NeuronId> y2_relay;
  std::vector<NeuronId> y2_inhibitor;
  std::vector<NeuronId> g;  // bucket selectors
  std::vector<NeuronId> f;  // position selectors
  std::vector<NeuronId> e;  // encoding neurons

  // Present only in delayed-start instances: a relay between the data inputs
  // and c_0 that shifts the whole schedule by one round.
  std::optional<NeuronId> start_relay;
  std::vector<NeuronId> clock;            // c_0 .. c_{5 sqrt n}
  std::vector<NeuronId> clock_inhibitor;  // c_1' .. c_{5 sqrt n - 1}'

  std::vector<NeuronId> d1;  // output triggers
  std::vector<NeuronId> d2;  // excitation when e_i stayed silent
  std::vector<NeuronId> d3;  // inhibition when e_i fired
  std::vector<NeuronId> d3_companion;  // d_{j,3'}, keeps d_{j,3} on

  NeuronId z;
  std::optional<NeuronId> reset;

  // 5 sqrt(n): rounds from a fresh start to a valid output.
  int rounds() const { return 5 * sqrt_n; }
  // Round offset of the schedule (1 for delayed-start instances).
  int start_delay() const { return start_relay ? 1 : 0; }
  // Auxiliary neurons the construction uses:
  // 2 log n relays + 3 sqrt n selectors/encoders + (5 sqrt n + 1) clock +
  // (5 sqrt n - 1) clock inhibitors + 4 sqrt n decoders, plus the reset
  // neuron and start relay when present (and z when it is auxiliary).
  std::size_t expected_auxiliary_count(bool output_is_auxiliary) const;
  // Global data index addressed by index bits y.
  std::size_t Target(const Bits& y_bits) const;
};

struct NeuroRamOptions {
  bool with_reset = false;
  bool delayed_start = false;
  // Kind given to z: kOutput for a stand-alone network, kAuxiliary when the
  // instance is embedded in a larger network.
  NeuronKind output_kind = NeuronKind::kOutput;
  // Prefix for neuron names and manifest roles, e.g. "S1[3]/".
  std::string prefix;
};

// Throws std::invalid_argument unless n = 2^(2m) for some m >= 1.
void CheckNeuroRamSize(int n);

// Adds a complete indexing network reading the given data and index neurons
// (which may be inputs or auxiliary neurons of an enclosing network).
NeuroRamLayout AddNeuroRam(NetworkBuilder& builder,
                           std::span<const NeuronId> data,
                           std::span<const NeuronId> index,
                           const NeuroRamOptions& options);

// Stand-alone network: inputs x_0..x_{n-1}, y_0..y_{log n - 1}, output z.
std::pair<Network, NeuroRamLayout> BuildNeuroRam(int n, bool with_reset,
                                                 Rational temperature);

// True iff, for every e_i, the excitatory weight into e_i other than g_i's
// edge is at most 2^(sqrt n + 2).
bool CheckWeightFact(const Network& network, const NeuroRamLayout& layout);

// sum_j bucket_j * 2^(sqrt n - j) for a bucket of sqrt n bits. Throws
// std::logic_error if it disagrees with 2 * dec(reverse(bucket)).
BigInt ExpectedEncodingPotential(const Bits& bucket);

struct IndexInstance {
  Bits x;
  Bits y;
};

// Throws std::invalid_argument unless |x| = n and |y| = log2 n.
void CheckInstance(const NeuroRamLayout& layout, const IndexInstance& instance);
bool GroundTruth(const NeuroRamLayout& layout, const IndexInstance& instance);

// Reusable indexing runner: one network, many (instance, seed) queries.
class IndexingRunner {
 public:
  IndexingRunner(int n, Rational temperature, bool with_reset = false);
  // The simulator points into network_.
  IndexingRunner(const IndexingRunner&) = delete;
  IndexingRunner& operator=(const IndexingRunner&) = delete;

  const Network& network() const { return network_; }
  const NeuroRamLayout& layout() const { return layout_; }
  const Simulator& simulator() const { return simulator_; }

  ClampSpec Clamps(const IndexInstance& instance) const;
  // Trace of rounds 0..5 sqrt(n) with the instance clamped throughout.
  Trace RunTrace(const IndexInstance& instance, std::uint64_t seed) const;
  // z at round 5 sqrt(n).
  bool Solve(const IndexInstance& instance, std::uint64_t seed) const;

 private:
  explicit IndexingRunner(std::pair<Network, NeuroRamLayout> built);

  Network network_;
  NeuroRamLayout layout_;
  Simulator simulator_;
};

bool SolveIndex(int n, const IndexInstance& instance, std::uint64_t seed,
                Rational temperature);

enum class ClockCheck { kPass, kFail, kNeverStarted };

// Checks the clock schedule on a trace of rounds 0..5 sqrt(n) + 1 (offset by
// the start delay): for i >= 1, c_i fires at round i+1 and in no other round
// <= 5 sqrt(n) + 1; c_0 fires at rounds 1 and 2 only. c_0 is driven by the
// data inputs for a second round before c_1' can inhibit it, which is also why
// c_1 carries the inhibitory edge from c_1'.
ClockCheck CheckClockTrace(const NeuroRamLayout& layout, const Trace& trace);
ClockCheck ClockTraceCheck(const IndexingRunner& runner, const Bits& x,
                           std::uint64_t seed);

// Presents the instances back to back, 5 sqrt(n) + 1 rounds each, on a
// network built with a reset neuron; returns z at the last round of every
// window. Throws std::invalid_argument if the network has no reset neuron.
Bits RunMultiInput(const Network& network, const NeuroRamLayout& layout,
                   std::span<const IndexInstance> instances,
                   std::uint64_t seed);

}  // namespace neuroram

#endif  // NEURORAM_NEURO_RAM_H_
