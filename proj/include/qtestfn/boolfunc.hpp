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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtestfn/bits.hpp"

namespace qtestfn {

/// Largest variable count a truth table may have (2^20 entries).
inline constexpr int kMaxTableVars = 20;

/// A Boolean function of n variables stored as its 2^n output bits.
///
/// Entry i is f(x1..xn) where x1 is the most significant bit of i, so the
/// table is listed as the inputs count 00, 01, 10, 11.
class TruthTable {
   public:
    TruthTable(int num_vars, std::vector<std::uint8_t> bits);

    /// Parses a bare binary string whose length is a power of two.
    static TruthTable from_binary(std::string_view binary);
    static TruthTable constant(int num_vars, bool value);

    int num_vars() const {
        return num_vars_;
    }
    std::size_t size() const {
        return bits_.size();
    }
    bool operator[](std::size_t index) const {
        return bits_[index] != 0;
    }
    bool at(const BitVec &x) const;
    std::span<const std::uint8_t> bits() const {
        return bits_;
    }

    TruthTable complement() const;
    /// The table read backwards (mirror image about its center).
    TruthTable reversed() const;
    /// This table followed by `tail`, as a function of one more variable.
    TruthTable concat(const TruthTable &tail) const;

    std::string to_binary() const;
    /// Numeric value in base 10, most significant entry first.
    std::string to_decimal() const;

    /// Tables of equal size order by numeric value.
    friend std::strong_ordering operator<=>(const TruthTable &a, const TruthTable &b);
    friend bool operator==(const TruthTable &a, const TruthTable &b) = default;

   private:
    int num_vars_;
    std::vector<std::uint8_t> bits_;
};

/// The affine form f(x) = complement XOR parity(x AND mask).
struct ParityForm {
    BitVec mask;
    bool complement = false;

    int num_vars() const {
        return mask.width();
    }
    /// Readable expression such as "x1 ^ x3" or "~(x2)".
    std::string expression() const;

    bool operator==(const ParityForm &) const = default;
};

enum class FunctionClass { Positive, Negative, NotAdmissible };

const char *to_string(FunctionClass c);

struct FunctionFamily {
    std::vector<TruthTable> positives;
    std::vector<TruthTable> negatives;
};

/// Builds every recursively symmetric/antisymmetric table on n variables by
/// concatenating each lower-level table with itself and with its mirror in
/// the numerically ordered list. Positives keep construction order; for
/// n >= 2 negatives are listed in numerical order.
FunctionFamily generate_functions(int num_vars, int max_vars = kMaxTableVars);

/// True when the table and, recursively, both of its halves are each equal
/// to their reversal or to the complement of their reversal.
bool is_admissible(const TruthTable &table);

/// Throws NotAdmissible when no affine parity form reproduces the table.
ParityForm to_parity_form(const TruthTable &table);
TruthTable from_parity_form(const ParityForm &form);

FunctionClass classify(const TruthTable &table);

/// Uppercase hex of the table's numeric value, zero-padded to ceil(2^n / 4)
/// digits and without a prefix.
std::string hex_encode(const TruthTable &table);

/// Accepts a binary string of length 2^n, or hex (bare, "$" or "0x"
/// prefixed). Throws ParseError or LengthMismatch.
TruthTable hex_decode(std::string_view text, int num_vars);

/// Like hex_decode but infers n from the text: a bare 0/1 string is binary,
/// anything else is hex with 4 bits per digit.
TruthTable parse_function(std::string_view text);

/// The shift d with y = x XOR d.
BitVec delta_between(const BitVec &x, const BitVec &y);

/// True iff f(x) == f(x XOR delta) for every x. For admissible tables the
/// brute-force answer is cross-checked against parity(delta AND mask) == 0.
bool is_invariant_under(const TruthTable &table, const BitVec &delta);

}  // namespace qtestfn
