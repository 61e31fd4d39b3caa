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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "neuroram/experiment.h"
#include "neuroram/parallel.h"

namespace neuroram {
namespace {

TEST(ExperimentTest, ExhaustiveIndexingAtFourBits) {
  ExperimentConfig config;
  config.kind = ExperimentKind::kIndexingExhaustive;
  config.n = 4;
  config.trials = 100;
  config.temperature = Rational(1, 32);
  const ExperimentReport report = RunExperiment(config);
  EXPECT_EQ(report.rows.size(), 64u);
  EXPECT_GE(report.min_rate, 0.99);
  EXPECT_TRUE(report.passed());
  for (const ExperimentRow& row : report.rows) {
    EXPECT_LE(row.successes, row.trials);
  }
}

TEST(ExperimentTest, CsvIsByteStable) {
  ExperimentConfig config;
  config.kind = ExperimentKind::kIndexingSampled;
  config.n = 16;
  config.cases = 5;
  config.trials = 10;
  config.seed = 123;
  const std::string a = FormatCsv(RunExperiment(config));
  const std::string b = FormatCsv(RunExperiment(config));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.substr(0, a.find('\n')), "case,inputs,truth,trials,successes,rate");
  config.seed = 124;
  EXPECT_NE(FormatCsv(RunExperiment(config)), a);
}

TEST(ExperimentTest, ClockAtSixteenBits) {
  ExperimentConfig config;
  config.kind = ExperimentKind::kClock;
  config.n = 16;
  config.cases = 4;
  config.trials = 25;
  config.temperature = Rational(1, 32);
  const ExperimentReport report = RunExperiment(config);
  EXPECT_TRUE(report.passed()) << FormatSummary(report);
}

TEST(ExperimentTest, EquivalenceOnARandomNetwork) {
  ExperimentConfig config;
  config.kind = ExperimentKind::kEquivalence;
  config.trials = 100000;
  const ExperimentReport report = RunExperiment(config);
  EXPECT_EQ(report.rows.size(), 3u);
  EXPECT_TRUE(report.passed()) << FormatSummary(report);
}

TEST(ExperimentTest, VcBoundsHold) {
  ExperimentConfig config;
  config.kind = ExperimentKind::kVc;
  config.cases = 50;
  const ExperimentReport report = RunExperiment(config);
  EXPECT_EQ(report.rows.size(), 50u);
  EXPECT_TRUE(report.passed());
}

TEST(ExperimentTest, FailingAssertionsAreReported) {
  ExperimentConfig config;
  config.kind = ExperimentKind::kIndexingSampled;
  config.n = 4;
  config.cases = 3;
  config.trials = 20;
  // At a very high temperature the network answers at chance.
  config.temperature = Rational(8, 1);
  const ExperimentReport report = RunExperiment(config);
  EXPECT_FALSE(report.passed());
  EXPECT_NE(FormatSummary(report).find("\"passed\": false"), std::string::npos);
}

TEST(ExperimentTest, RejectsBadConfigurations) {
  EXPECT_THROW(ParseExperimentKind("bogus"), std::invalid_argument);
  EXPECT_EQ(ParseExperimentKind("similarity"), ExperimentKind::kSimilarity);
  ExperimentConfig config;
  config.kind = ExperimentKind::kIndexingExhaustive;
  config.n = 16;
  EXPECT_THROW(RunExperiment(config), std::invalid_argument);
  config.n = 8;
  config.kind = ExperimentKind::kIndexingSampled;
  EXPECT_THROW(RunExperiment(config), std::invalid_argument);
  config.kind = ExperimentKind::kEquivalence;
  config.trials = 10;
  EXPECT_THROW(RunExperiment(config), std::invalid_argument);
}

TEST(ParallelTest, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  ParallelFor(hits.size(), [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  ParallelFor(0, [](std::size_t) { FAIL(); });
}

TEST(ParallelTest, RethrowsTheBodyException) {
  EXPECT_THROW(ParallelFor(100,
                           [](std::size_t i) {
                             if (i == 42) throw std::runtime_error("boom");
                           }),
               std::runtime_error);
}

TEST(ParallelTest, ThreadCountHonorsEnvironment) {
  setenv("NEURORAM_THREADS", "3", 1);
  EXPECT_EQ(WorkerCount(), 3);
  setenv("NEURORAM_THREADS", "junk", 1);
  EXPECT_GE(WorkerCount(), 1);
  unsetenv("NEURORAM_THREADS");
  EXPECT_GE(WorkerCount(), 1);
}

}  // namespace
}  // namespace neuroram
