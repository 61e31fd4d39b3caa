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

#include "neuroram/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "neuroram/bits.h"
#include "neuroram/neuro_ram.h"
#include "neuroram/parallel.h"
#include "neuroram/random_network.h"
#include "neuroram/rng.h"
#include "neuroram/similarity.h"
#include "neuroram/transforms.h"
#include "neuroram/vc.h"

namespace neuroram {
namespace {

constexpr std::size_t kMaxExhaustiveRows = 4096;

std::uint64_t CaseSeed(const ExperimentConfig& config, std::size_t i) {
  return TrialSeed(config.seed, i);
}

std::uint64_t InstanceSeed(std::uint64_t case_seed) {
  return TrialSeed(case_seed, 0);
}

std::uint64_t RunSeed(std::uint64_t case_seed, std::size_t k) {
  return TrialSeed(case_seed, k + 1);
}

void CheckTrialCount(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.cases < 1) throw std::invalid_argument("cases must be >= 1");
}

std::string FormatRate(double rate) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f", rate);
  return buffer;
}

// Runs `trials` seeded trials for every case; success(case, seed) reports
// whether a single run agreed with the case's truth.
template <typename Success>
void RunTrials(const ExperimentConfig& config, std::vector<ExperimentRow>& rows,
               const std::vector<std::uint64_t>& case_seeds, Success success) {
  const std::size_t trials = static_cast<std::size_t>(config.trials);
  std::vector<std::uint8_t> outcome(rows.size() * trials);
  ParallelFor(outcome.size(), [&](std::size_t flat) {
    const std::size_t i = flat / trials;
    const std::size_t k = flat % trials;
    outcome[flat] = success(i, RunSeed(case_seeds[i], k));
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].trials = trials;
    rows[i].successes = 0;
    for (std::size_t k = 0; k < trials; ++k) {
      rows[i].successes += outcome[i * trials + k];
    }
  }
}

Assertion MinRateAssertion(const std::vector<ExperimentRow>& rows,
                           double required) {
  double worst = 1;
  std::string where;
  for (const ExperimentRow& row : rows) {
    if (row.rate() < worst) {
      worst = row.rate();
      where = row.inputs;
    }
  }
  Assertion a{"min_rate>=" + FormatRate(required), worst >= required,
              "min rate " + FormatRate(worst)};
  if (!a.passed) a.detail += " at " + where;
  return a;
}

Assertion AggregateRateAssertion(const std::vector<ExperimentRow>& rows,
                                 double required) {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  for (const ExperimentRow& row : rows) {
    trials += row.trials;
    successes += row.successes;
  }
  const double rate = trials == 0 ? 0 : static_cast<double>(successes) / trials;
  return {"aggregate_rate>=" + FormatRate(required), rate >= required,
          "aggregate rate " + FormatRate(rate)};
}

Rational TemperatureFor(const ExperimentConfig& config) {
  if (config.temperature) return *config.temperature;
  return DefaultTemperature(config.n);
}

void RunIndexing(const ExperimentConfig& config, bool exhaustive,
                 ExperimentReport& report) {
  CheckTrialCount(config);
  const IndexingRunner runner(config.n, TemperatureFor(config));
  const NeuroRamLayout& layout = runner.layout();
  std::vector<IndexInstance> instances;
  std::vector<std::uint64_t> case_seeds;
  if (exhaustive) {
    if (config.n > 10 ||
        (std::size_t{1} << config.n) * config.n > kMaxExhaustiveRows) {
      throw std::invalid_argument(
          "exhaustive indexing is limited to " +
          std::to_string(kMaxExhaustiveRows) + " (X, Y) combinations");
    }
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << config.n); ++x) {
      for (int y = 0; y < config.n; ++y) {
        instances.push_back({Bin(x, config.n), Bin(y, layout.log_n)});
      }
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
      case_seeds.push_back(CaseSeed(config, i));
    }
  } else {
    for (int i = 0; i < config.cases; ++i) {
      const std::uint64_t case_seed = CaseSeed(config, i);
      std::mt19937_64 gen(InstanceSeed(case_seed));
      instances.push_back({RandomBits(config.n, gen()),
                           RandomBits(layout.log_n, gen())});
      case_seeds.push_back(case_seed);
    }
  }
  std::vector<bool> truth;
  for (const IndexInstance& instance : instances) {
    truth.push_back(GroundTruth(layout, instance));
    report.rows.push_back({"x=" + FormatBits(instance.x) +
                               " y=" + FormatBits(instance.y),
                           truth.back() ? "1" : "0", 0, 0});
  }
  RunTrials(config, report.rows, case_seeds,
            [&](std::size_t i, std::uint64_t seed) {
              return runner.Solve(instances[i], seed) == truth[i];
            });
  report.assertions.push_back(MinRateAssertion(report.rows, config.min_rate));
}

void RunClock(const ExperimentConfig& config, ExperimentReport& report) {
  CheckTrialCount(config);
  const IndexingRunner runner(config.n, TemperatureFor(config));
  std::vector<Bits> xs;
  std::vector<std::uint64_t> case_seeds;
  for (int i = 0; i < config.cases; ++i) {
    const std::uint64_t case_seed = CaseSeed(config, i);
    std::mt19937_64 gen(InstanceSeed(case_seed));
    Bits x;
    do {
      x = RandomBits(config.n, gen());
    } while (PopCount(x) == 0);
    xs.push_back(x);
    case_seeds.push_back(case_seed);
    report.rows.push_back({"x=" + FormatBits(x), "pattern", 0, 0});
  }
  RunTrials(config, report.rows, case_seeds,
            [&](std::size_t i, std::uint64_t seed) {
              return ClockTraceCheck(runner, xs[i], seed) == ClockCheck::kPass;
            });
  report.assertions.push_back(
      AggregateRateAssertion(report.rows, config.min_rate));
}

// x with exactly `distance` positions flipped, chosen uniformly.
Bits FlipRandomPositions(const Bits& x, int distance, std::mt19937_64& gen) {
  std::vector<int> positions(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) positions[i] = static_cast<int>(i);
  std::shuffle(positions.begin(), positions.end(), gen);
  Bits y = x;
  for (int i = 0; i < distance; ++i) y[positions[i]] = !y[positions[i]];
  return y;
}

void RunSimilarity(const ExperimentConfig& config, ExperimentReport& report) {
  CheckTrialCount(config);
  const SimilarityRunner runner(config.n, config.eps, config.c,
                                TemperatureFor(config));
  const int distance = static_cast<int>(std::ceil(config.eps * config.n - 1e-9));
  std::vector<std::pair<Bits, Bits>> pairs;
  std::vector<bool> truth;
  std::vector<std::uint64_t> case_seeds;
  for (int i = 0; i < config.cases; ++i) {
    const std::uint64_t case_seed = CaseSeed(config, i);
    std::mt19937_64 gen(InstanceSeed(case_seed));
    const Bits x1 = RandomBits(config.n, gen());
    const Bits far = FlipRandomPositions(x1, distance, gen);
    pairs.emplace_back(x1, x1);
    truth.push_back(false);
    pairs.emplace_back(x1, far);
    truth.push_back(true);
    // The equal and far rows of a case use distinct run seeds.
    case_seeds.push_back(TrialSeed(case_seed, 0x5eed0));
    case_seeds.push_back(TrialSeed(case_seed, 0x5eed1));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    report.rows.push_back({"x1=" + FormatBits(pairs[i].first) +
                               " x2=" + FormatBits(pairs[i].second),
                           truth[i] ? "1" : "0", 0, 0});
  }
  RunTrials(config, report.rows, case_seeds,
            [&](std::size_t i, std::uint64_t seed) {
              return runner.Test(pairs[i].first, pairs[i].second, seed) ==
                     truth[i];
            });
  report.assertions.push_back(MinRateAssertion(report.rows, config.min_rate));
}

std::uint64_t Hits(double probability, std::size_t trials) {
  return static_cast<std::uint64_t>(std::llround(probability * trials));
}

void RunEquivalence(const ExperimentConfig& config, ExperimentReport& report) {
  const Rational temperature =
      config.temperature ? *config.temperature : Rational(1, 4);
  const std::size_t trials = static_cast<std::size_t>(std::max(config.trials, 0));
  for (int i = 0; i < config.cases; ++i) {
    const std::uint64_t case_seed = CaseSeed(config, i);
    std::mt19937_64 gen(InstanceSeed(case_seed));
    RandomNetworkOptions options;
    options.inputs = config.inputs;
    options.auxiliary = config.auxiliary;
    options.temperature = temperature;
    const Network network = RandomNetwork(options, gen());
    const Bits inputs = RandomBits(config.inputs, gen());
    const FeedforwardNetwork ff = Unroll(network, config.rounds);
    const EquivalenceReport unrolled = UnrollingEquivalence(
        network, inputs, config.rounds, trials, TrialSeed(case_seed, 1));
    const EquivalenceReport circuit = DistributionEquivalence(
        network, inputs, config.rounds, trials, TrialSeed(case_seed, 2));

    const std::string label = "case=" + std::to_string(i) +
                              " inputs=" + FormatBits(inputs);
    report.rows.push_back({label + " model=recurrent", "-", trials,
                           Hits(unrolled.p_snn, trials)});
    report.rows.push_back({label + " model=unrolled", "-", trials,
                           Hits(unrolled.p_circuit, trials)});
    report.rows.push_back({label + " model=threshold-circuit", "-", trials,
                           Hits(circuit.p_circuit, trials)});

    const std::size_t expected_aux =
        static_cast<std::size_t>(config.rounds - 1) * (config.auxiliary + 1);
    const std::size_t aux = ff.network.auxiliary_count();
    report.assertions.push_back(
        {label + " auxiliary_count", aux == expected_aux,
         std::to_string(aux) + " vs " + std::to_string(expected_aux)});
    report.assertions.push_back({label + " unrolled |delta|<=0.01",
                                 unrolled.delta <= 0.01,
                                 "delta " + FormatRate(unrolled.delta)});
    report.assertions.push_back({label + " circuit |delta|<=0.01",
                                 circuit.delta <= 0.01,
                                 "delta " + FormatRate(circuit.delta)});
  }
}

void RunVc(const ExperimentConfig& config, ExperimentReport& report) {
  if (config.cases < 1) throw std::invalid_argument("cases must be >= 1");
  bool all = true;
  for (int i = 0; i < config.cases; ++i) {
    std::mt19937_64 gen(InstanceSeed(CaseSeed(config, i)));
    const int d = std::uniform_int_distribution<int>(1, 4)(gen);
    const int m = std::uniform_int_distribution<int>(1, 3)(gen);
    const int z =
        std::uniform_int_distribution<int>(0, std::min(6, 1 << d))(gen);
    const VarThresholdArchitecture arch = RandomArchitecture(d, m, gen());
    const std::vector<Bits> samples = RandomSamples(d, z, gen());
    const DichotomyCount count = CountDichotomies(arch, samples);

    bool ok = count.dichotomies <= BaumProductBound(count.per_gate);
    for (std::uint64_t per_gate : count.per_gate) {
      ok = ok && per_gate <= static_cast<std::uint64_t>(z) + 1;
    }
    if (z >= 2 && m >= 2) {
      ok = ok && count.dichotomies <= std::pow(static_cast<double>(z), m);
    }
    all = all && ok;
    report.rows.push_back({"d=" + std::to_string(d) + " m=" +
                               std::to_string(m) + " z=" + std::to_string(z),
                           std::to_string(count.dichotomies), 1, ok ? 1u : 0u});
  }
  report.assertions.push_back(
      {"dichotomy bounds", all, all ? "all cases within bounds" : "violated"});
}

}  // namespace

std::string_view ToString(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kIndexingExhaustive:
      return "indexing-exhaustive";
    case ExperimentKind::kIndexingSampled:
      return "indexing-sampled";
    case ExperimentKind::kClock:
      return "clock";
    case ExperimentKind::kSimilarity:
      return "similarity";
    case ExperimentKind::kEquivalence:
      return "equivalence";
    case ExperimentKind::kVc:
      return "vc";
  }
  return "?";
}

ExperimentKind ParseExperimentKind(std::string_view name) {
  for (ExperimentKind kind :
       {ExperimentKind::kIndexingExhaustive, ExperimentKind::kIndexingSampled,
        ExperimentKind::kClock, ExperimentKind::kSimilarity,
        ExperimentKind::kEquivalence, ExperimentKind::kVc}) {
    if (ToString(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown experiment kind '" + std::string(name) +
                              "'");
}

bool ExperimentReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const Assertion& a) { return a.passed; });
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.config = config;
  switch (config.kind) {
    case ExperimentKind::kIndexingExhaustive:
      RunIndexing(config, /*exhaustive=*/true, report);
      break;
    case ExperimentKind::kIndexingSampled:
      RunIndexing(config, /*exhaustive=*/false, report);
      break;
    case ExperimentKind::kClock:
      RunClock(config, report);
      break;
    case ExperimentKind::kSimilarity:
      RunSimilarity(config, report);
      break;
    case ExperimentKind::kEquivalence:
      RunEquivalence(config, report);
      break;
    case ExperimentKind::kVc:
      RunVc(config, report);
      break;
  }
  if (!report.rows.empty()) {
    report.min_rate = 1;
    double total = 0;
    for (const ExperimentRow& row : report.rows) {
      report.min_rate = std::min(report.min_rate, row.rate());
      total += row.rate();
    }
    report.mean_rate = total / static_cast<double>(report.rows.size());
  }
  report.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

std::string FormatCsv(const ExperimentReport& report) {
  std::string csv = "case,inputs,truth,trials,successes,rate\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const ExperimentRow& row = report.rows[i];
    csv += std::to_string(i) + "," + row.inputs + "," + row.truth + "," +
           std::to_string(row.trials) + "," + std::to_string(row.successes) +
           "," + FormatRate(row.rate()) + "\n";
  }
  return csv;
}

std::string FormatSummary(const ExperimentReport& report) {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(ToString(report.config.kind));
  doc["n"] = report.config.n;
  doc["seed"] = report.config.seed;
  doc["rows"] = report.rows.size();
  doc["min_rate"] = report.min_rate;
  doc["mean_rate"] = report.mean_rate;
  doc["wall_seconds"] = report.wall_seconds;
  nlohmann::ordered_json assertions = nlohmann::ordered_json::array();
  for (const Assertion& a : report.assertions) {
    nlohmann::ordered_json entry;
    entry["name"] = a.name;
    entry["passed"] = a.passed;
    entry["detail"] = a.detail;
    assertions.push_back(std::move(entry));
  }
  doc["assertions"] = std::move(assertions);
  doc["passed"] = report.passed();
  return doc.dump(2) + "\n";
}

}  // namespace neuroram
