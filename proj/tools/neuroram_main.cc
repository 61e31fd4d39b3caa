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

// Command-line front end for building, simulating and analysing networks.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "neuroram/bits.h"
#include "neuroram/dynamics.h"
#include "neuroram/errors.h"
#include "neuroram/experiment.h"
#include "neuroram/neuro_ram.h"
#include "neuroram/parallel.h"
#include "neuroram/rational.h"
#include "neuroram/rng.h"
#include "neuroram/serialization.h"
#include "neuroram/similarity.h"
#include "neuroram/transforms.h"
#include "neuroram/vc.h"

namespace neuroram {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitFailedAssertion = 1;
constexpr int kExitError = 2;

// Writes a machine-readable failure summary to stderr.
void ReportFailure(const std::string& type, const std::string& message) {
  Json doc;
  doc["status"] = "error";
  doc["type"] = type;
  doc["message"] = message;
  std::cerr << doc.dump() << "\n";
}

Rational TemperatureOr(const std::string& text, int n) {
  return text.empty() ? DefaultTemperature(n) : Rational::Parse(text);
}

void WriteOrPrint(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    WriteFile(path, contents);
  }
}

// Parses "2^k" as log2 = k, or a plain non-negative integer.
double ParseLog2ClassSize(const std::string& text) {
  if (text.rfind("2^", 0) == 0) {
    const double k = std::stod(text.substr(2));
    if (k < 0) throw std::invalid_argument("class size exponent must be >= 0");
    return k;
  }
  const BigInt size(text);
  if (size < 1) throw std::invalid_argument("class size must be >= 1");
  const std::size_t msb = boost::multiprecision::msb(size);
  const std::size_t shift = msb > 52 ? msb - 52 : 0;
  return static_cast<double>(shift) +
         std::log2(BigInt(size >> shift).convert_to<double>());
}

struct Options {
  int n = 4;
  bool reset = false;
  std::string lambda;
  std::string out;
  std::string net;
  double eps = 0.25;
  double c = 2;
  std::string x;
  std::string y;
  std::string x1;
  std::string x2;
  std::uint64_t seed = 1;
  int trials = 100;
  int t = 2;
  int rounds = 0;
  std::string inputs;
  std::string arch;
  std::string samples;
  int m = 2;
  std::string class_size;
  std::string kind;
  int cases = 1;
  int auxiliary = 3;
  int input_count = 3;
  double min_rate = 0.99;
};

int BuildNeuroRamCommand(const Options& o) {
  const auto [network, layout] =
      BuildNeuroRam(o.n, o.reset, TemperatureOr(o.lambda, o.n));
  WriteOrPrint(o.out, SerializeNetwork(network));
  return 0;
}

int BuildSimilarityCommand(const Options& o) {
  const auto [network, layout] =
      BuildSimilarity(o.n, o.eps, o.c, TemperatureOr(o.lambda, o.n));
  WriteOrPrint(o.out, SerializeNetwork(network));
  return 0;
}

int IndexCommand(const Options& o) {
  const IndexingRunner runner(o.n, TemperatureOr(o.lambda, o.n));
  const IndexInstance instance{ParseBits(o.x), ParseBits(o.y)};
  CheckInstance(runner.layout(), instance);
  const bool truth = GroundTruth(runner.layout(), instance);
  std::vector<std::uint8_t> ok(o.trials);
  ParallelFor(ok.size(), [&](std::size_t k) {
    ok[k] = runner.Solve(instance, TrialSeed(o.seed, k)) == truth;
  });
  std::size_t successes = 0;
  for (std::uint8_t v : ok) successes += v;
  std::cout << "n,x,y,truth,trials,successes\n"
            << o.n << "," << o.x << "," << o.y << "," << truth << ","
            << o.trials << "," << successes << "\n";
  return 0;
}

int SimilarityCommand(const Options& o) {
  const SimilarityRunner runner(o.n, o.eps, o.c, TemperatureOr(o.lambda, o.n));
  const Bits x1 = ParseBits(o.x1);
  const Bits x2 = ParseBits(o.x2);
  std::vector<std::uint8_t> positive(o.trials);
  ParallelFor(positive.size(), [&](std::size_t k) {
    positive[k] = runner.Test(x1, x2, TrialSeed(o.seed, k));
  });
  std::size_t positives = 0;
  for (std::uint8_t v : positive) positives += v;
  std::cout << "n,eps,hamming,trials,positives\n"
            << o.n << "," << o.eps << "," << HammingDistance(x1, x2) << ","
            << o.trials << "," << positives << "\n";
  return 0;
}

Bits InputsOrZero(const std::string& text, const Network& network) {
  if (text.empty()) return Bits(network.inputs().size(), false);
  return ParseBits(text);
}

int RunCommand(const Options& o) {
  const Network network = LoadNetwork(o.net);
  const Bits inputs = InputsOrZero(o.inputs, network);
  const Trace trace =
      Run(network, ClampSpec(network.inputs(), inputs), o.rounds, o.seed);
  std::cout << "round,state\n";
  for (const RoundState& state : trace) {
    std::string bits;
    for (std::uint8_t b : state.bits()) bits += b ? '1' : '0';
    std::cout << state.round() << "," << bits << "\n";
  }
  return 0;
}

int UnrollCommand(const Options& o) {
  const FeedforwardNetwork ff = Unroll(LoadNetwork(o.net), o.t);
  WriteOrPrint(o.out, SerializeNetwork(ff.network));
  return 0;
}

int DerandomizeCommand(const Options& o) {
  const FeedforwardNetwork ff = FeedforwardFromManifest(LoadNetwork(o.net));
  WriteOrPrint(o.out, SerializeThresholdCircuit(SampleThresholdCircuit(ff, o.seed)));
  return 0;
}

int EquivCommand(const Options& o) {
  const Network network = LoadNetwork(o.net);
  const EquivalenceReport report = DistributionEquivalence(
      network, InputsOrZero(o.inputs, network), o.t, o.trials, o.seed);
  std::cout << SerializeEquivalenceReport(report);
  return report.within() ? 0 : kExitFailedAssertion;
}

int VcCountCommand(const Options& o) {
  const VarThresholdArchitecture arch = ParseArchitecture(ReadFile(o.arch));
  const std::vector<Bits> samples = ParseSamples(ReadFile(o.samples));
  const DichotomyCount count = CountDichotomies(arch, samples);
  Json doc;
  doc["samples"] = samples.size();
  doc["dichotomies"] = count.dichotomies;
  doc["per_gate"] = count.per_gate;
  doc["baum_product_bound"] = BaumProductBound(count.per_gate).str();
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int VcBoundsCommand(const Options& o) {
  Json doc;
  doc["m"] = o.m;
  doc["circuit_vc_upper"] = CircuitVcUpper(o.m);
  doc["class_size"] = o.class_size;
  doc["n"] = o.n;
  doc["sauer_lower"] = SauerLowerFromLog2(ParseLog2ClassSize(o.class_size), o.n);
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int ExperimentCommand(const Options& o) {
  ExperimentConfig config;
  config.kind = ParseExperimentKind(o.kind);
  config.n = o.n;
  config.eps = o.eps;
  config.c = o.c;
  if (!o.lambda.empty()) config.temperature = Rational::Parse(o.lambda);
  config.trials = o.trials;
  config.cases = o.cases;
  config.seed = o.seed;
  config.inputs = o.input_count;
  config.auxiliary = o.auxiliary;
  config.rounds = o.rounds > 0 ? o.rounds : 4;
  config.min_rate = o.min_rate;
  const ExperimentReport report = RunExperiment(config);
  WriteOrPrint(o.out, FormatCsv(report));
  const std::string summary = FormatSummary(report);
  if (!report.passed()) {
    std::cerr << summary;
    return kExitFailedAssertion;
  }
  if (!o.out.empty() && o.out != "-") std::cout << summary;
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Build, simulate and analyse stochastic spiking networks"};
  app.require_subcommand(1);
  Options o;
  int (*command)(const Options&) = nullptr;
  auto on = [&](CLI::App* sub, int (*fn)(const Options&)) {
    sub->callback([&command, fn] { command = fn; });
  };

  CLI::App* build = app.add_subcommand("build-neuroram", "Build an indexing network");
  build->add_option("--n", o.n, "Data bits (an even power of two)")->required();
  build->add_flag("--reset", o.reset, "Add the reset neuron");
  build->add_option("--lambda", o.lambda, "Temperature p/q (default 1/(4 log2 n))");
  build->add_option("--out", o.out, "Output file (default stdout)");
  on(build, BuildNeuroRamCommand);

  CLI::App* bsim = app.add_subcommand("build-similarity", "Build a similarity-testing network");
  bsim->add_option("--n", o.n)->required();
  bsim->add_option("--eps", o.eps);
  bsim->add_option("--c", o.c);
  bsim->add_option("--lambda", o.lambda);
  bsim->add_option("--out", o.out);
  on(bsim, BuildSimilarityCommand);

  CLI::App* index = app.add_subcommand("index", "Estimate indexing success for one instance");
  index->add_option("--n", o.n)->required();
  index->add_option("--x", o.x, "Data bits, position 0 first")->required();
  index->add_option("--y", o.y, "Index bits, position 0 first")->required();
  index->add_option("--seed", o.seed);
  index->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  index->add_option("--lambda", o.lambda);
  on(index, IndexCommand);

  CLI::App* sim = app.add_subcommand("similarity", "Estimate the similarity test's positive rate");
  sim->add_option("--n", o.n)->required();
  sim->add_option("--eps", o.eps);
  sim->add_option("--c", o.c);
  sim->add_option("--x1", o.x1)->required();
  sim->add_option("--x2", o.x2)->required();
  sim->add_option("--seed", o.seed);
  sim->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  sim->add_option("--lambda", o.lambda);
  on(sim, SimilarityCommand);

  CLI::App* run = app.add_subcommand("run", "Simulate a network and print its trace");
  run->add_option("--net", o.net)->required();
  run->add_option("--rounds", o.rounds)->required();
  run->add_option("--inputs", o.inputs, "Input bits in id order (default all 0)");
  run->add_option("--seed", o.seed);
  on(run, RunCommand);

  CLI::App* unroll = app.add_subcommand("unroll", "Unroll a recurrent network into t layers");
  unroll->add_option("--net", o.net)->required();
  unroll->add_option("--t", o.t)->required();
  unroll->add_option("--out", o.out);
  on(unroll, UnrollCommand);

  CLI::App* derand = app.add_subcommand("derandomize", "Sample a threshold circuit from an unrolled network");
  derand->add_option("--net", o.net)->required();
  derand->add_option("--seed", o.seed);
  derand->add_option("--out", o.out);
  on(derand, DerandomizeCommand);

  CLI::App* equiv = app.add_subcommand("equiv", "Compare a network with its sampled threshold circuits");
  equiv->add_option("--net", o.net)->required();
  equiv->add_option("--t", o.t)->required();
  equiv->add_option("--trials", o.trials)->required();
  equiv->add_option("--seed", o.seed);
  equiv->add_option("--inputs", o.inputs, "Input bits in id order (default all 0)");
  on(equiv, EquivCommand);

  CLI::App* vc = app.add_subcommand("vc", "Dichotomy counts and VC bounds");
  vc->require_subcommand(1);
  CLI::App* count = vc->add_subcommand("count", "Count dichotomies of an architecture");
  count->add_option("--arch", o.arch)->required();
  count->add_option("--samples", o.samples)->required();
  on(count, VcCountCommand);
  CLI::App* bounds = vc->add_subcommand("bounds", "Evaluate the VC bound formulas");
  bounds->add_option("--m", o.m)->required();
  bounds->add_option("--class-size", o.class_size, "Integer or 2^k")->required();
  bounds->add_option("--n", o.n)->required();
  on(bounds, VcBoundsCommand);

  CLI::App* exp = app.add_subcommand("experiment", "Run a configured experiment and write CSV");
  exp->add_option("--kind", o.kind,
                  "indexing-exhaustive, indexing-sampled, clock, similarity, "
                  "equivalence or vc")
      ->required();
  exp->add_option("--n", o.n);
  exp->add_option("--eps", o.eps);
  exp->add_option("--c", o.c);
  exp->add_option("--lambda", o.lambda);
  exp->add_option("--trials", o.trials);
  exp->add_option("--cases", o.cases);
  exp->add_option("--seed", o.seed);
  exp->add_option("--inputs", o.input_count, "Equivalence: input neurons");
  exp->add_option("--aux", o.auxiliary, "Equivalence: auxiliary neurons");
  exp->add_option("--rounds", o.rounds, "Equivalence: rounds t");
  exp->add_option("--min-rate", o.min_rate);
  exp->add_option("--out", o.out, "CSV file (default stdout)");
  on(exp, ExperimentCommand);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  try {
    return command(o);
  } catch (const ParseError& e) {
    ReportFailure("parse", e.what());
  } catch (const ResourceError& e) {
    ReportFailure("resource", e.what());
  } catch (const std::invalid_argument& e) {
    ReportFailure("invalid-argument", e.what());
  } catch (const std::exception& e) {
    ReportFailure("error", e.what());
  }
  return kExitError;
}

}  // namespace
}  // namespace neuroram

int main(int argc, char** argv) { return neuroram::Main(argc, argv); }
