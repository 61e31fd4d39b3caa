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

#ifndef NEURORAM_VC_H_
#define NEURORAM_VC_H_

#include <cstdint>
#include <vector>

#include "neuroram/bits.h"
#include "neuroram/network.h"

namespace neuroram {

// One gate of a fixed-weight circuit whose threshold is a free parameter.
// The gate fires iff input_weights . x + gate_weights . (earlier gates) >=
// threshold.
struct VarThresholdGate {
  std::vector<double> input_weights;  // one per circuit input
  std::vector<double> gate_weights;   // one per earlier gate (may be shorter)
};

// Feedforward circuit over d boolean inputs. Gates are listed in evaluation
// order, so the gate graph is acyclic by construction.
struct VarThresholdArchitecture {
  int inputs = 0;
  std::vector<VarThresholdGate> gates;
  int output = 0;  // index into gates
};

// Throws std::invalid_argument unless the architecture is well formed:
// d >= 1, m >= 1, every gate has d input weights and at most as many gate
// weights as earlier gates, and output names a gate.
void CheckArchitecture(const VarThresholdArchitecture& arch);

// Distinct sample points of {0,1}^d. Throws std::invalid_argument on
// duplicates, wrong lengths, or more than 64 samples.
void CheckSamples(const VarThresholdArchitecture& arch,
                  const std::vector<Bits>& samples);

inline constexpr std::uint64_t kDichotomyBudget = 10'000'000;
inline constexpr std::uint64_t kSubsetBudget = 1'000'000;

struct DichotomyCount {
  std::uint64_t dichotomies = 0;  // distinct output labelings of the samples
  // Per gate, the largest number of distinct behaviors the gate showed on the
  // samples for any fixed behavior of the gates before it.
  std::vector<std::uint64_t> per_gate;
};

// Exact number of labelings of the samples the architecture realizes over all
// threshold choices. Enumerates, gate by gate, every distinct behavior the
// gate can have given the behaviors already chosen for earlier gates (the
// thresholds s_1 < ... < s_k of its distinct pre-activations plus s_k + 1).
// Throws ResourceError if z * (z+1)^m exceeds kDichotomyBudget.
DichotomyCount CountDichotomies(const VarThresholdArchitecture& arch,
                                const std::vector<Bits>& samples);

// Product of per-gate dichotomy counts.
BigInt BaumProductBound(const std::vector<std::uint64_t>& per_gate_counts);

// 3 m log2 m. Throws std::invalid_argument if m < 2.
double CircuitVcUpper(int m);

// log2(size) / (log2 n + log2 e). Throws std::invalid_argument if size < 1
// or n < 2.
double SauerLower(const BigInt& class_size, int n);
// Same, with the class size given as log2(size) >= 0.
double SauerLowerFromLog2(double log2_class_size, int n);

// Largest z <= max_z such that some z-point subset of {0,1}^d is shattered.
// Throws ResourceError if the subsets to examine exceed kSubsetBudget.
int VcByEnumeration(const VarThresholdArchitecture& arch, int max_z);

}  // namespace neuroram

#endif  // NEURORAM_VC_H_
