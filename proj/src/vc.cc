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

#include "neuroram/vc.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "neuroram/errors.h"

namespace neuroram {
namespace {

// Depth-first search over gate behaviors. behavior[g] is a bit mask over the
// samples telling where gate g fires.
class DichotomyEnumerator {
 public:
  DichotomyEnumerator(const VarThresholdArchitecture& arch,
                      const std::vector<Bits>& samples)
      : arch_(arch),
        samples_(samples),
        behavior_(arch.gates.size(), 0),
        per_gate_(arch.gates.size(), 0) {
    const std::size_t z = samples.size();
    input_sums_.resize(arch.gates.size(), std::vector<double>(z, 0));
    for (std::size_t g = 0; g < arch.gates.size(); ++g) {
      for (std::size_t j = 0; j < z; ++j) {
        double sum = 0;
        for (int i = 0; i < arch.inputs; ++i) {
          if (samples[j][i]) sum += arch.gates[g].input_weights[i];
        }
        input_sums_[g][j] = sum;
      }
    }
  }

  void Run() { Visit(0); }
  const std::set<std::uint64_t>& labelings() const { return labelings_; }
  const std::vector<std::uint64_t>& per_gate() const { return per_gate_; }

 private:
  void Visit(std::size_t g) {
    if (g == arch_.gates.size()) {
      labelings_.insert(behavior_[arch_.output]);
      return;
    }
    const std::size_t z = samples_.size();
    const VarThresholdGate& gate = arch_.gates[g];
    std::vector<double> sums = input_sums_[g];
    for (std::size_t h = 0; h < gate.gate_weights.size(); ++h) {
      for (std::size_t j = 0; j < z; ++j) {
        if (behavior_[h] >> j & 1) sums[j] += gate.gate_weights[h];
      }
    }
    std::vector<double> levels = sums;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    // Threshold levels[i] fires exactly on sums >= levels[i]; one more
    // behavior fires nowhere.
    per_gate_[g] = std::max<std::uint64_t>(per_gate_[g], levels.size() + 1);
    for (std::size_t i = 0; i <= levels.size(); ++i) {
      std::uint64_t mask = 0;
      if (i < levels.size()) {
        for (std::size_t j = 0; j < z; ++j) {
          if (sums[j] >= levels[i]) mask |= std::uint64_t{1} << j;
        }
      }
      behavior_[g] = mask;
      Visit(g + 1);
    }
  }

  const VarThresholdArchitecture& arch_;
  const std::vector<Bits>& samples_;
  std::vector<std::vector<double>> input_sums_;
  std::vector<std::uint64_t> behavior_;
  std::vector<std::uint64_t> per_gate_;
  std::set<std::uint64_t> labelings_;
};

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * static_cast<long double>(n - k + i) / i;
  }
  return static_cast<std::uint64_t>(std::llround(result));
}

}  // namespace

void CheckArchitecture(const VarThresholdArchitecture& arch) {
  if (arch.inputs < 1 || arch.inputs > 20) {
    throw std::invalid_argument("architecture needs 1..20 inputs");
  }
  if (arch.gates.empty()) {
    throw std::invalid_argument("architecture needs at least one gate");
  }
  for (std::size_t g = 0; g < arch.gates.size(); ++g) {
    const VarThresholdGate& gate = arch.gates[g];
    if (gate.input_weights.size() != static_cast<std::size_t>(arch.inputs)) {
      throw std::invalid_argument("gate " + std::to_string(g) + " has " +
                                  std::to_string(gate.input_weights.size()) +
                                  " input weights, expected " +
                                  std::to_string(arch.inputs));
    }
    if (gate.gate_weights.size() > g) {
      throw std::invalid_argument("gate " + std::to_string(g) +
                                  " reads a gate that is not before it");
    }
  }
  if (arch.output < 0 ||
      static_cast<std::size_t>(arch.output) >= arch.gates.size()) {
    throw std::invalid_argument("output does not name a gate");
  }
}

void CheckSamples(const VarThresholdArchitecture& arch,
                  const std::vector<Bits>& samples) {
  if (samples.size() > 64) {
    throw std::invalid_argument("at most 64 samples are supported");
  }
  std::set<Bits> seen;
  for (const Bits& sample : samples) {
    if (sample.size() != static_cast<std::size_t>(arch.inputs)) {
      throw std::invalid_argument("sample " + FormatBits(sample) +
                                  " does not have " +
                                  std::to_string(arch.inputs) + " bits");
    }
    if (!seen.insert(sample).second) {
      throw std::invalid_argument("duplicate sample " + FormatBits(sample));
    }
  }
}

DichotomyCount CountDichotomies(const VarThresholdArchitecture& arch,
                                const std::vector<Bits>& samples) {
  CheckArchitecture(arch);
  CheckSamples(arch, samples);
  const double z = static_cast<double>(samples.size());
  const double work =
      std::max(z, 1.0) * std::pow(z + 1, static_cast<double>(arch.gates.size()));
  if (work > static_cast<double>(kDichotomyBudget)) {
    throw ResourceError("dichotomy enumeration needs about " +
                        std::to_string(static_cast<std::uint64_t>(work)) +
                        " steps, budget is " +
                        std::to_string(kDichotomyBudget));
  }
  DichotomyEnumerator enumerator(arch, samples);
  enumerator.Run();
  return {enumerator.labelings().size(), enumerator.per_gate()};
}

BigInt BaumProductBound(const std::vector<std::uint64_t>& per_gate_counts) {
  BigInt product = 1;
  for (std::uint64_t count : per_gate_counts) product *= count;
  return product;
}

double CircuitVcUpper(int m) {
  if (m < 2) {
    throw std::invalid_argument("the circuit VC bound needs m >= 2 gates");
  }
  return 3.0 * m * std::log2(static_cast<double>(m));
}

double SauerLowerFromLog2(double log2_class_size, int n) {
  if (!(log2_class_size >= 0)) {
    throw std::invalid_argument("class size must be at least 1");
  }
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return log2_class_size /
         (std::log2(static_cast<double>(n)) + std::numbers::log2e);
}

double SauerLower(const BigInt& class_size, int n) {
  if (class_size < 1) {
    throw std::invalid_argument("class size must be at least 1");
  }
  // log2 from the leading 53 bits, exact for powers of two of any size.
  const std::size_t msb = boost::multiprecision::msb(class_size);
  const std::size_t shift = msb > 52 ? msb - 52 : 0;
  const BigInt top = class_size >> shift;
  const double log2_size =
      static_cast<double>(shift) + std::log2(top.convert_to<double>());
  return SauerLowerFromLog2(log2_size, n);
}

int VcByEnumeration(const VarThresholdArchitecture& arch, int max_z) {
  CheckArchitecture(arch);
  if (max_z < 0) throw std::invalid_argument("max_z must be non-negative");
  const std::uint64_t domain = std::uint64_t{1} << arch.inputs;
  const int limit = static_cast<int>(
      std::min<std::uint64_t>({static_cast<std::uint64_t>(max_z), domain, 63}));
  std::uint64_t examined = 0;
  int vc = 0;
  for (int z = 1; z <= limit; ++z) {
    examined += Binomial(domain, z);
    if (examined > kSubsetBudget) {
      throw ResourceError("VC enumeration needs more than " +
                          std::to_string(kSubsetBudget) + " subsets");
    }
    // Walk the z-subsets of {0,1}^d in lexicographic order.
    std::vector<std::uint64_t> pick(z);
    for (int i = 0; i < z; ++i) pick[i] = i;
    bool shattered = false;
    while (!shattered) {
      std::vector<Bits> samples;
      samples.reserve(z);
      for (std::uint64_t point : pick) {
        samples.push_back(Bin(point, arch.inputs));
      }
      shattered = CountDichotomies(arch, samples).dichotomies ==
                  (std::uint64_t{1} << z);
      int i = z - 1;
      while (i >= 0 && pick[i] == domain - z + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int k = i + 1; k < z; ++k) pick[k] = pick[k - 1] + 1;
    }
    // Subsets of shattered sets are shattered, so the first size with no
    // shattered set ends the search.
    if (!shattered) break;
    vc = z;
  }
  return vc;
}

}  // namespace neuroram
