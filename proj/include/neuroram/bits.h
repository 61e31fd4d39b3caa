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

#ifndef NEURORAM_BITS_H_
#define NEURORAM_BITS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace neuroram {

// Bit strings are stored with position 0 first; position 0 is the least
// significant bit when a string is read as an integer.
using Bits = std::vector<bool>;

// Integer encoded by bits, sum of bits[i] * 2^i. Throws std::invalid_argument
// if the string is longer than 64 bits and a high bit is set.
std::uint64_t Dec(const Bits& bits);

// Fixed-width binary encoding of value; inverse of Dec.
// Throws std::invalid_argument if value >= 2^width.
Bits Bin(std::uint64_t value, int width);

// "1011" -> {1,0,1,1}. Throws std::invalid_argument on any other character.
Bits ParseBits(std::string_view text);
std::string FormatBits(const Bits& bits);

Bits Reversed(const Bits& bits);
int PopCount(const Bits& bits);
int HammingDistance(const Bits& a, const Bits& b);

}  // namespace neuroram

#endif  // NEURORAM_BITS_H_
