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

#include "neuroram/rational.h"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace neuroram {
namespace {

std::int64_t ParseInt(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) +
                                "', expected p/q");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (numerator <= 0 || denominator <= 0) {
    throw std::invalid_argument("rational must be positive, got " +
                                std::to_string(numerator) + "/" +
                                std::to_string(denominator));
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  numerator_ = numerator / g;
  denominator_ = denominator / g;
}

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInt(text, text), 1);
  return Rational(ParseInt(text.substr(0, slash), text),
                  ParseInt(text.substr(slash + 1), text));
}

double Rational::ToDouble() const {
  return static_cast<double>(numerator_) / static_cast<double>(denominator_);
}

std::string Rational::ToString() const {
  return std::to_string(numerator_) + "/" + std::to_string(denominator_);
}

Rational DefaultTemperature(int n) {
  if (n < 2) throw std::invalid_argument("DefaultTemperature: n must be >= 2");
  int log_n = 0;
  while ((1 << (log_n + 1)) <= n) ++log_n;
  return Rational(1, 4 * log_n);
}

}  // namespace neuroram
