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

#ifndef NEURORAM_SERIALIZATION_H_
#define NEURORAM_SERIALIZATION_H_

#include <string>
#include <string_view>
#include <vector>

#include "neuroram/bits.h"
#include "neuroram/network.h"
#include "neuroram/transforms.h"
#include "neuroram/vc.h"

namespace neuroram {

// Network document:
//   {"lambda": "p/q",
//    "neurons": [{"id", "name", "kind", "polarity", "bias": "<decimal>"}],
//    "synapses": [{"pre", "post", "weight": "<decimal>"}],
//    "manifest": {"role": [ids...]} or null}
// Weights and biases are decimal strings so that they round-trip exactly at
// any size. Every parser throws ParseError naming the JSON pointer of the
// offending element ("/" for the document itself).
std::string SerializeNetwork(const Network& network);
Network ParseNetwork(std::string_view text);

// Threshold circuit document:
//   {"lambda": double, "neuron_count", "inputs": [ids],
//    "gates": [{"id", "name", "mean", "threshold",
//               "incoming": [{"pre", "weight"}]}],
//    "output": id}
std::string SerializeThresholdCircuit(const ThresholdCircuit& circuit);
ThresholdCircuit ParseThresholdCircuit(std::string_view text);

// Architecture document:
//   {"inputs": d, "gates": [{"input_weights": [...], "gate_weights": [...]}],
//    "output": gate index}
std::string SerializeArchitecture(const VarThresholdArchitecture& arch);
VarThresholdArchitecture ParseArchitecture(std::string_view text);

// Sample document: {"samples": ["0101", ...]}.
std::string SerializeSamples(const std::vector<Bits>& samples);
std::vector<Bits> ParseSamples(std::string_view text);

std::string SerializeEquivalenceReport(const EquivalenceReport& report);

// Whole-file helpers. Throw std::runtime_error if the file cannot be read or
// written.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

void SaveNetwork(const Network& network, const std::string& path);
Network LoadNetwork(const std::string& path);

}  // namespace neuroram

#endif  // NEURORAM_SERIALIZATION_H_
