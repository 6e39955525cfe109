// Copyright 2026 The qtestfn Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace qtestfn {

/// A fixed-width vector of bits labelled left to right.
///
/// Element 0 is the leftmost label (x1) and the most significant bit of
/// `value()`, so the bit string "0110" has value 6. The same convention
/// indexes truth tables and state-vector amplitudes.
class BitVec {
   public:
    static constexpr int kMaxWidth = 63;

    BitVec() = default;
    BitVec(int width, std::uint64_t value);

    /// Parses a string of '0'/'1' characters.
    static BitVec parse(std::string_view text);
    static BitVec zeros(int width) {
        return BitVec(width, 0);
    }
    /// The vector with only element `i` set.
    static BitVec unit(int width, int i);

    int width() const {
        return width_;
    }
    std::uint64_t value() const {
        return value_;
    }
    bool operator[](int i) const {
        return (value_ >> (width_ - 1 - i)) & 1;
    }
    BitVec with(int i, bool bit) const;

    /// Bitwise operators require equal widths and throw LengthMismatch.
    BitVec operator^(const BitVec &other) const;
    BitVec operator&(const BitVec &other) const;

    /// Appends `other` to the right.
    BitVec concat(const BitVec &other) const;

    /// XOR of all elements.
    bool parity() const;

    std::string str() const;

    bool operator==(const BitVec &other) const = default;

   private:
    int width_ = 0;
    std::uint64_t value_ = 0;
};

/// Parity of the bits of a machine word.
inline bool parity_of(std::uint64_t word) {
    return __builtin_parityll(word) != 0;
}

}  // namespace qtestfn
