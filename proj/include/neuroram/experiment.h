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

#ifndef NEURORAM_EXPERIMENT_H_
#define NEURORAM_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neuroram/rational.h"

namespace neuroram {

enum class ExperimentKind {
  kIndexingExhaustive,  // every (X, Y) for the given n
  kIndexingSampled,     // `cases` random (X, Y)
  kClock,               // clock firing pattern for `cases` random nonzero X
  kSimilarity,          // equal and eps-far input pairs
  kEquivalence,         // recurrent vs unrolled vs threshold circuits
  kVc,                  // dichotomy counts against the product bounds
};

std::string_view ToString(ExperimentKind kind);
// Throws std::invalid_argument for unknown names.
ExperimentKind ParseExperimentKind(std::string_view name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kIndexingExhaustive;
  int n = 4;
  double eps = 0.25;
  double c = 2;
  // Defaults to 1/(4 log2 n), or 1/4 for the equivalence experiment.
  std::optional<Rational> temperature;
  int trials = 100;
  int cases = 1;
  std::uint64_t seed = 1;
  // Random network shape for the equivalence experiment.
  int inputs = 3;
  int auxiliary = 3;
  int rounds = 4;
  // Required success rate for the assertions.
  double min_rate = 0.99;
};

// One experimental case: `successes` of `trials` runs agreed with `truth`.
struct ExperimentRow {
  std::string inputs;
  std::string truth;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;

  double rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / trials;
  }
};

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ExperimentRow> rows;
  std::vector<Assertion> assertions;
  double min_rate = 0;
  double mean_rate = 0;
  double wall_seconds = 0;

  bool passed() const;
};

// Runs the configured experiment. All randomness derives from config.seed:
// case i uses TrialSeed(seed, i); within it, instance data is drawn from
// TrialSeed(case_seed, 0) and trial k runs with TrialSeed(case_seed, k + 1).
// Throws std::invalid_argument for configurations the modules reject.
ExperimentReport RunExperiment(const ExperimentConfig& config);

// Columns: case,inputs,truth,trials,successes,rate. Byte-stable for a fixed
// configuration (no timing data).
std::string FormatCsv(const ExperimentReport& report);
// Summary with assertions and wall time, as a JSON object.
std::string FormatSummary(const ExperimentReport& report);

}  // namespace neuroram

#endif  // NEURORAM_EXPERIMENT_H_
