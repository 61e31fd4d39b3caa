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

#include "neuroram/bits.h"

#include <stdexcept>

namespace neuroram {

std::uint64_t Dec(const Bits& bits) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    if (i >= 64) throw std::invalid_argument("Dec: value exceeds 64 bits");
    value |= std::uint64_t{1} << i;
  }
  return value;
}

Bits Bin(std::uint64_t value, int width) {
  if (width < 0 || width > 64) {
    throw std::invalid_argument("Bin: width must be in [0, 64]");
  }
  if (width < 64 && (value >> width) != 0) {
    throw std::invalid_argument("Bin: value " + std::to_string(value) +
                                " does not fit in " + std::to_string(width) +
                                " bits");
  }
  Bits bits(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) bits[i] = (value >> i) & 1;
  return bits;
}

Bits ParseBits(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch == '0') {
      bits.push_back(false);
    } else if (ch == '1') {
      bits.push_back(true);
    } else {
      throw std::invalid_argument("bit string may only contain 0 and 1: '" +
                                  std::string(text) + "'");
    }
  }
  return bits;
}

std::string FormatBits(const Bits& bits) {
  std::string text;
  text.reserve(bits.size());
  for (bool bit : bits) text.push_back(bit ? '1' : '0');
  return text;
}

Bits Reversed(const Bits& bits) { return Bits(bits.rbegin(), bits.rend()); }

int PopCount(const Bits& bits) {
  int count = 0;
  for (bool bit : bits) count += bit;
  return count;
}

int HammingDistance(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("HammingDistance: length mismatch");
  }
  int distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) distance += a[i] != b[i];
  return distance;
}

}  // namespace neuroram
