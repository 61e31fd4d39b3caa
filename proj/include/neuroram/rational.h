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

#ifndef NEURORAM_RATIONAL_H_
#define NEURORAM_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace neuroram {

// Positive rational number p/q in lowest terms, used for the temperature.
class Rational {
 public:
  // Throws std::invalid_argument unless numerator > 0 and denominator > 0.
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p/q" or a bare integer "p".
  static Rational Parse(std::string_view text);

  std::int64_t numerator() const { return numerator_; }
  std::int64_t denominator() const { return denominator_; }
  double ToDouble() const;
  std::string ToString() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t numerator_;
  std::int64_t denominator_;
};

// Default temperature 1 / (4 log2 n) for networks over n inputs.
Rational DefaultTemperature(int n);

}  // namespace neuroram

#endif  // NEURORAM_RATIONAL_H_
