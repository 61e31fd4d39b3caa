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

#include "neuroram/serialization.h"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "neuroram/errors.h"

namespace neuroram {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// A JSON value together with its JSON pointer, for error messages.
class Node {
 public:
  Node(const Json& value, std::string path)
      : value_(value), path_(std::move(path)) {}

  const Json& value() const { return value_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(path_.empty() ? "/" : path_, message);
  }

  Node Field(std::string_view key) const {
    if (!value_.is_object()) Fail("expected object");
    auto it = value_.find(key);
    if (it == value_.end()) {
      throw ParseError(path_ + "/" + std::string(key),
                       "missing field '" + std::string(key) + "'");
    }
    return Node(*it, path_ + "/" + std::string(key));
  }

  std::vector<Node> Elements() const {
    if (!value_.is_array()) Fail("expected array");
    std::vector<Node> out;
    out.reserve(value_.size());
    for (std::size_t i = 0; i < value_.size(); ++i) {
      out.emplace_back(value_[i], path_ + "/" + std::to_string(i));
    }
    return out;
  }

  std::string String() const {
    if (!value_.is_string()) Fail("expected string");
    return value_.get<std::string>();
  }

  std::int64_t Integer(std::int64_t lo, std::int64_t hi) const {
    if (!value_.is_number_integer()) Fail("expected integer");
    const std::int64_t v = value_.get<std::int64_t>();
    if (v < lo || v > hi) {
      Fail("value " + std::to_string(v) + " outside [" + std::to_string(lo) +
           ", " + std::to_string(hi) + "]");
    }
    return v;
  }

  double Number() const {
    if (!value_.is_number()) Fail("expected number");
    return value_.get<double>();
  }

  BigInt Decimal() const {
    const std::string text = String();
    std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
    if (start == text.size()) Fail("expected decimal string");
    for (std::size_t i = start; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') Fail("expected decimal string");
    }
    return BigInt(text);
  }

 private:
  const Json& value_;
  std::string path_;
};

Json ParseDocument(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("/", std::string("malformed JSON: ") + e.what());
  }
}

NeuronId ParseId(const Node& node, std::size_t count) {
  if (count == 0) node.Fail("no neurons to refer to");
  return NeuronId{static_cast<std::uint32_t>(
      node.Integer(0, static_cast<std::int64_t>(count) - 1))};
}

std::string Dump(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string SerializeNetwork(const Network& network) {
  OrderedJson doc;
  doc["lambda"] = network.temperature().ToString();
  OrderedJson neurons = OrderedJson::array();
  for (const Neuron& n : network.neurons()) {
    OrderedJson entry;
    entry["id"] = n.id.value;
    entry["name"] = n.name;
    entry["kind"] = std::string(ToString(n.kind));
    entry["polarity"] = std::string(ToString(n.polarity));
    entry["bias"] = n.bias.str();
    neurons.push_back(std::move(entry));
  }
  doc["neurons"] = std::move(neurons);
  OrderedJson synapses = OrderedJson::array();
  for (const Synapse& s : network.synapses()) {
    OrderedJson entry;
    entry["pre"] = s.pre.value;
    entry["post"] = s.post.value;
    entry["weight"] = s.weight.str();
    synapses.push_back(std::move(entry));
  }
  doc["synapses"] = std::move(synapses);
  if (network.manifest()) {
    OrderedJson manifest = OrderedJson::object();
    for (const auto& [role, ids] : *network.manifest()) {
      OrderedJson list = OrderedJson::array();
      for (NeuronId id : ids) list.push_back(id.value);
      manifest[role] = std::move(list);
    }
    doc["manifest"] = std::move(manifest);
  } else {
    doc["manifest"] = nullptr;
  }
  return Dump(doc);
}

Network ParseNetwork(std::string_view text) {
  const Json doc = ParseDocument(text);
  const Node root(doc, "");
  const Node lambda = root.Field("lambda");
  std::optional<Rational> temperature;
  try {
    temperature = Rational::Parse(lambda.String());
  } catch (const std::invalid_argument& e) {
    lambda.Fail(e.what());
  }
  NetworkBuilder builder(*temperature);

  for (const Node& entry : root.Field("neurons").Elements()) {
    const std::int64_t id = entry.Field("id").Integer(0, INT32_MAX);
    if (static_cast<std::size_t>(id) != builder.size()) {
      entry.Field("id").Fail("expected id " + std::to_string(builder.size()));
    }
    const Node kind_node = entry.Field("kind");
    const std::string kind_text = kind_node.String();
    NeuronKind kind;
    if (kind_text == "input") {
      kind = NeuronKind::kInput;
    } else if (kind_text == "output") {
      kind = NeuronKind::kOutput;
    } else if (kind_text == "auxiliary") {
      kind = NeuronKind::kAuxiliary;
    } else {
      kind_node.Fail("unknown kind '" + kind_text + "'");
    }
    const Node polarity_node = entry.Field("polarity");
    const std::string polarity_text = polarity_node.String();
    Polarity polarity;
    if (polarity_text == "excitatory") {
      polarity = Polarity::kExcitatory;
    } else if (polarity_text == "inhibitory") {
      polarity = Polarity::kInhibitory;
    } else {
      polarity_node.Fail("unknown polarity '" + polarity_text + "'");
    }
    builder.AddNeuron(entry.Field("name").String(), kind, polarity,
                      entry.Field("bias").Decimal());
  }

  for (const Node& entry : root.Field("synapses").Elements()) {
    const NeuronId pre = ParseId(entry.Field("pre"), builder.size());
    const NeuronId post = ParseId(entry.Field("post"), builder.size());
    builder.AddSynapse(pre, post, entry.Field("weight").Decimal());
  }

  const Node manifest = root.Field("manifest");
  if (!manifest.value().is_null()) {
    if (!manifest.value().is_object()) manifest.Fail("expected object or null");
    for (const auto& [role, ids] : manifest.value().items()) {
      const Node list(ids, manifest.path() + "/" + role);
      for (const Node& id : list.Elements()) {
        builder.AddRole(role, ParseId(id, builder.size()));
      }
    }
  }
  return builder.Build();
}

std::string SerializeThresholdCircuit(const ThresholdCircuit& circuit) {
  OrderedJson doc;
  doc["lambda"] = circuit.temperature();
  doc["neuron_count"] = circuit.neuron_count();
  OrderedJson inputs = OrderedJson::array();
  for (NeuronId id : circuit.inputs()) inputs.push_back(id.value);
  doc["inputs"] = std::move(inputs);
  OrderedJson gates = OrderedJson::array();
  for (const ThresholdGate& gate : circuit.gates()) {
    OrderedJson entry;
    entry["id"] = gate.id.value;
    entry["name"] = gate.name;
    entry["mean"] = gate.mean;
    entry["threshold"] = gate.threshold;
    OrderedJson incoming = OrderedJson::array();
    for (const auto& [pre, weight] : gate.incoming) {
      OrderedJson edge;
      edge["pre"] = pre.value;
      edge["weight"] = weight;
      incoming.push_back(std::move(edge));
    }
    entry["incoming"] = std::move(incoming);
    gates.push_back(std::move(entry));
  }
  doc["gates"] = std::move(gates);
  doc["output"] = circuit.output().value;
  return Dump(doc);
}

ThresholdCircuit ParseThresholdCircuit(std::string_view text) {
  const Json doc = ParseDocument(text);
  const Node root(doc, "");
  const double temperature = root.Field("lambda").Number();
  const std::size_t count =
      static_cast<std::size_t>(root.Field("neuron_count").Integer(1, INT32_MAX));
  std::vector<NeuronId> inputs;
  for (const Node& id : root.Field("inputs").Elements()) {
    inputs.push_back(ParseId(id, count));
  }
  std::vector<ThresholdGate> gates;
  for (const Node& entry : root.Field("gates").Elements()) {
    ThresholdGate gate;
    gate.id = ParseId(entry.Field("id"), count);
    gate.name = entry.Field("name").String();
    gate.mean = entry.Field("mean").Number();
    gate.threshold = entry.Field("threshold").Number();
    for (const Node& edge : entry.Field("incoming").Elements()) {
      gate.incoming.emplace_back(ParseId(edge.Field("pre"), count),
                                 edge.Field("weight").Number());
    }
    gates.push_back(std::move(gate));
  }
  const NeuronId output = ParseId(root.Field("output"), count);
  try {
    return ThresholdCircuit(count, std::move(inputs), std::move(gates), output,
                            temperature);
  } catch (const std::invalid_argument& e) {
    root.Fail(e.what());
  }
}

std::string SerializeArchitecture(const VarThresholdArchitecture& arch) {
  OrderedJson doc;
  doc["inputs"] = arch.inputs;
  OrderedJson gates = OrderedJson::array();
  for (const VarThresholdGate& gate : arch.gates) {
    OrderedJson entry;
    entry["input_weights"] = gate.input_weights;
    entry["gate_weights"] = gate.gate_weights;
    gates.push_back(std::move(entry));
  }
  doc["gates"] = std::move(gates);
  doc["output"] = arch.output;
  return Dump(doc);
}

VarThresholdArchitecture ParseArchitecture(std::string_view text) {
  const Json doc = ParseDocument(text);
  const Node root(doc, "");
  VarThresholdArchitecture arch;
  arch.inputs = static_cast<int>(root.Field("inputs").Integer(1, 20));
  for (const Node& entry : root.Field("gates").Elements()) {
    VarThresholdGate gate;
    for (const Node& w : entry.Field("input_weights").Elements()) {
      gate.input_weights.push_back(w.Number());
    }
    for (const Node& w : entry.Field("gate_weights").Elements()) {
      gate.gate_weights.push_back(w.Number());
    }
    arch.gates.push_back(std::move(gate));
  }
  arch.output = static_cast<int>(root.Field("output").Integer(0, INT32_MAX));
  try {
    CheckArchitecture(arch);
  } catch (const std::invalid_argument& e) {
    root.Fail(e.what());
  }
  return arch;
}

std::string SerializeSamples(const std::vector<Bits>& samples) {
  OrderedJson doc;
  OrderedJson list = OrderedJson::array();
  for (const Bits& sample : samples) list.push_back(FormatBits(sample));
  doc["samples"] = std::move(list);
  return Dump(doc);
}

std::vector<Bits> ParseSamples(std::string_view text) {
  const Json doc = ParseDocument(text);
  const Node root(doc, "");
  std::vector<Bits> samples;
  for (const Node& entry : root.Field("samples").Elements()) {
    try {
      samples.push_back(ParseBits(entry.String()));
    } catch (const std::invalid_argument& e) {
      entry.Fail(e.what());
    }
  }
  return samples;
}

std::string SerializeEquivalenceReport(const EquivalenceReport& report) {
  OrderedJson doc;
  doc["rounds"] = report.rounds;
  doc["trials"] = report.trials;
  doc["p_snn"] = report.p_snn;
  doc["p_circuit"] = report.p_circuit;
  doc["delta"] = report.delta;
  doc["sigma"] = report.sigma;
  doc["threshold"] = report.threshold;
  doc["within"] = report.within();
  return Dump(doc);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

void SaveNetwork(const Network& network, const std::string& path) {
  WriteFile(path, SerializeNetwork(network));
}

Network LoadNetwork(const std::string& path) {
  return ParseNetwork(ReadFile(path));
}

}  // namespace neuroram
