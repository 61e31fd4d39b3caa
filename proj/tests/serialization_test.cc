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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "neuroram/errors.h"
#include "neuroram/neuro_ram.h"
#include "neuroram/random_network.h"
#include "neuroram/serialization.h"
#include "neuroram/similarity.h"
#include "neuroram/transforms.h"

namespace neuroram {
namespace {

void ExpectSameNetwork(const Network& a, const Network& b) {
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.temperature(), b.temperature());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Neuron& x = a.neurons()[i];
    const Neuron& y = b.neurons()[i];
    EXPECT_EQ(x.id, y.id);
    EXPECT_EQ(x.name, y.name);
    EXPECT_EQ(x.kind, y.kind);
    EXPECT_EQ(x.polarity, y.polarity);
    EXPECT_EQ(x.bias, y.bias);
  }
  EXPECT_EQ(a.synapses(), b.synapses());
  EXPECT_EQ(a.manifest(), b.manifest());
}

TEST(NetworkJsonTest, IndexingNetworkRoundTrips) {
  const auto [net, layout] = BuildNeuroRam(16, true, Rational(1, 32));
  const std::string text = SerializeNetwork(net);
  const Network back = ParseNetwork(text);
  ExpectSameNetwork(net, back);
  EXPECT_EQ(SerializeNetwork(back), text);
}

TEST(NetworkJsonTest, SimilarityNetworkRoundTrips) {
  const auto [net, layout] = BuildSimilarity(4, 0.5, 2, Rational(1, 16));
  ExpectSameNetwork(net, ParseNetwork(SerializeNetwork(net)));
}

TEST(NetworkJsonTest, BigWeightsAreDecimalStrings) {
  NetworkBuilder b(Rational(3, 7));
  const NeuronId x = b.AddInput("x");
  const NeuronId z = b.AddNeuron("z", NeuronKind::kOutput,
                                 Polarity::kExcitatory, BigInt(1) << 70);
  b.AddSynapse(x, z, BigInt(1) << 66);
  const Network net = b.Build();
  const std::string text = SerializeNetwork(net);
  EXPECT_NE(text.find("\"73786976294838206464\""), std::string::npos);
  EXPECT_NE(text.find("\"lambda\": \"3/7\""), std::string::npos);
  EXPECT_NE(text.find("\"manifest\": null"), std::string::npos);
  const Network back = ParseNetwork(text);
  EXPECT_EQ(*back.weight(x, z), BigInt(1) << 66);
  EXPECT_EQ(back.neuron(z).bias, BigInt(1) << 70);
  EXPECT_FALSE(back.manifest().has_value());
}

TEST(NetworkJsonTest, FieldOrderIsFixed) {
  NetworkBuilder b(Rational(1, 4));
  const NeuronId x = b.AddInput("x");
  const NeuronId z = b.AddNeuron("z", NeuronKind::kOutput,
                                 Polarity::kExcitatory, 1);
  b.AddSynapse(x, z, -2);
  const std::string text = SerializeNetwork(b.Build());
  const auto at = [&](const char* key) { return text.find(key); };
  EXPECT_LT(at("\"lambda\""), at("\"neurons\""));
  EXPECT_LT(at("\"neurons\""), at("\"synapses\""));
  EXPECT_LT(at("\"synapses\""), at("\"manifest\""));
  EXPECT_LT(at("\"id\""), at("\"name\""));
  EXPECT_LT(at("\"name\""), at("\"kind\""));
  EXPECT_LT(at("\"kind\""), at("\"polarity\""));
  EXPECT_LT(at("\"polarity\""), at("\"bias\""));
  EXPECT_NE(text.find("\"weight\": \"-2\""), std::string::npos);
}

std::string ErrorPath(const std::string& text) {
  try {
    ParseNetwork(text);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(NetworkJsonTest, SchemaErrorsNameTheOffendingField) {
  EXPECT_EQ(ErrorPath(R"({"neurons": [], "synapses": [], "manifest": null})"),
            "/lambda");
  EXPECT_EQ(ErrorPath("{"), "/");
  EXPECT_EQ(ErrorPath(R"({"lambda": "0/1", "neurons": [], "synapses": [],
                          "manifest": null})"),
            "/lambda");
  const std::string neuron =
      R"({"id": 0, "name": "x", "kind": "input", "polarity": "excitatory",
          "bias": "0"})";
  EXPECT_EQ(ErrorPath(R"({"lambda": "1/2", "neurons": [)" + neuron +
                      R"(, {"id": 1, "name": "z", "kind": "output",
                      "polarity": "excitatory", "bias": 1}],
                      "synapses": [], "manifest": null})"),
            "/neurons/1/bias");
  EXPECT_EQ(ErrorPath(R"({"lambda": "1/2", "neurons": [)" + neuron +
                      R"(], "synapses": [{"pre": 0, "post": 4,
                      "weight": "2"}], "manifest": null})"),
            "/synapses/0/post");
  EXPECT_EQ(ErrorPath(R"({"lambda": "1/2", "neurons": [)" + neuron +
                      R"(], "synapses": [], "manifest": {"a": [0, 3]}})"),
            "/manifest/a/1");
  EXPECT_EQ(ErrorPath(R"({"lambda": "1/2", "neurons": [{"id": 0, "name": "x",
                      "kind": "hidden", "polarity": "excitatory",
                      "bias": "0"}], "synapses": [], "manifest": null})"),
            "/neurons/0/kind");
  EXPECT_EQ(ErrorPath(R"({"lambda": "1/2", "neurons": [{"id": 2, "name": "x",
                      "kind": "input", "polarity": "excitatory",
                      "bias": "0"}], "synapses": [], "manifest": null})"),
            "/neurons/0/id");
}

TEST(ThresholdCircuitJsonTest, RoundTripsExactly) {
  RandomNetworkOptions options;
  const FeedforwardNetwork ff = Unroll(RandomNetwork(options, 3), 4);
  const ThresholdCircuit circuit = SampleThresholdCircuit(ff, 11);
  const std::string text = SerializeThresholdCircuit(circuit);
  const ThresholdCircuit back = ParseThresholdCircuit(text);
  ASSERT_EQ(back.gates().size(), circuit.gates().size());
  for (std::size_t g = 0; g < back.gates().size(); ++g) {
    EXPECT_EQ(back.gates()[g].threshold, circuit.gates()[g].threshold);
    EXPECT_EQ(back.gates()[g].incoming, circuit.gates()[g].incoming);
  }
  EXPECT_EQ(SerializeThresholdCircuit(back), text);
  for (std::uint64_t v = 0; v < 8; ++v) {
    EXPECT_EQ(back.Evaluate(Bin(v, 3)), circuit.Evaluate(Bin(v, 3)));
  }
}

TEST(ArchitectureJsonTest, RoundTripsAndValidates) {
  const VarThresholdArchitecture arch = RandomArchitecture(3, 3, 9);
  const VarThresholdArchitecture back =
      ParseArchitecture(SerializeArchitecture(arch));
  EXPECT_EQ(back.inputs, 3);
  ASSERT_EQ(back.gates.size(), 3u);
  EXPECT_EQ(back.gates[2].gate_weights, arch.gates[2].gate_weights);
  EXPECT_EQ(back.output, 2);
  EXPECT_THROW(ParseArchitecture(R"({"inputs": 2, "gates": [
      {"input_weights": [1], "gate_weights": []}], "output": 0})"),
               ParseError);
}

TEST(SamplesJsonTest, RoundTrips) {
  const std::vector<Bits> samples = {{0, 1, 0, 1}, {1, 1, 0, 0}};
  EXPECT_EQ(ParseSamples(SerializeSamples(samples)), samples);
  try {
    ParseSamples(R"({"samples": ["01", "0x"]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "/samples/1");
  }
}

}  // namespace
}  // namespace neuroram
