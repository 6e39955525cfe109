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

#include "qtestfn/boolfunc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qtestfn/errors.hpp"

namespace qtestfn {

namespace {

void check_vars(int num_vars, int max_vars) {
    if (num_vars < 1 || num_vars > max_vars) {
        throw BoundsError("variable count " + std::to_string(num_vars) + " is outside 1.." +
                          std::to_string(max_vars));
    }
}

int hex_digit_value(char c) {
    if (c >= '0' && c <= '9') {
        return c - '0';
    }
    if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
    }
    if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
    }
    return -1;
}

bool is_binary_string(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

// Strips a "$" or "0x" prefix. Returns true when one was present.
bool strip_hex_prefix(std::string_view &text) {
    if (!text.empty() && text.front() == '$') {
        text.remove_prefix(1);
        return true;
    }
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text.remove_prefix(2);
        return true;
    }
    return false;
}

std::size_t hex_digits_for(int num_vars) {
    return ((std::size_t{1} << num_vars) + 3) / 4;
}

TruthTable decode_hex_digits(std::string_view digits, int num_vars) {
    std::size_t table_bits = std::size_t{1} << num_vars;
    if (digits.size() != hex_digits_for(num_vars)) {
        throw LengthMismatch("hex '" + std::string(digits) + "' has " + std::to_string(digits.size()) +
                             " digits, expected " + std::to_string(hex_digits_for(num_vars)) +
                             " for n=" + std::to_string(num_vars));
    }
    std::vector<std::uint8_t> nibble_bits;
    nibble_bits.reserve(digits.size() * 4);
    for (char c : digits) {
        int v = hex_digit_value(c);
        if (v < 0) {
            throw ParseError("not a hex digit: '" + std::string(1, c) + "'");
        }
        for (int b = 3; b >= 0; b--) {
            nibble_bits.push_back(static_cast<std::uint8_t>((v >> b) & 1));
        }
    }
    // Tables shorter than one nibble (n = 1) are right-aligned in the digit.
    std::size_t pad = nibble_bits.size() - table_bits;
    if (std::any_of(nibble_bits.begin(), nibble_bits.begin() + static_cast<std::ptrdiff_t>(pad),
                    [](std::uint8_t b) { return b != 0; })) {
        throw LengthMismatch("hex value does not fit in " + std::to_string(table_bits) + " bits");
    }
    return TruthTable(num_vars, std::vector<std::uint8_t>(nibble_bits.begin() + static_cast<std::ptrdiff_t>(pad),
                                                          nibble_bits.end()));
}

bool admissible_span(std::span<const std::uint8_t> s) {
    std::size_t len = s.size();
    if (len <= 2) {
        return true;
    }
    bool symmetric = true;
    bool antisymmetric = true;
    for (std::size_t i = 0; i < len / 2; i++) {
        bool same = s[i] == s[len - 1 - i];
        symmetric = symmetric && same;
        antisymmetric = antisymmetric && !same;
    }
    if (!symmetric && !antisymmetric) {
        return false;
    }
    return admissible_span(s.first(len / 2)) && admissible_span(s.last(len / 2));
}

}  // namespace

TruthTable::TruthTable(int num_vars, std::vector<std::uint8_t> bits) : num_vars_(num_vars), bits_(std::move(bits)) {
    check_vars(num_vars, kMaxTableVars);
    if (bits_.size() != (std::size_t{1} << num_vars)) {
        throw LengthMismatch("truth table for n=" + std::to_string(num_vars) + " needs " +
                             std::to_string(std::size_t{1} << num_vars) + " entries, got " +
                             std::to_string(bits_.size()));
    }
    for (auto b : bits_) {
        if (b > 1) {
            throw ParseError("truth table entries must be 0 or 1");
        }
    }
}

TruthTable TruthTable::from_binary(std::string_view binary) {
    if (!is_binary_string(binary)) {
        throw ParseError("not a binary truth table: '" + std::string(binary) + "'");
    }
    if (binary.size() < 2 || !std::has_single_bit(binary.size())) {
        throw LengthMismatch("truth table length " + std::to_string(binary.size()) + " is not 2^n with n >= 1");
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(binary.size());
    for (char c : binary) {
        bits.push_back(static_cast<std::uint8_t>(c == '1'));
    }
    return TruthTable(std::countr_zero(binary.size()), std::move(bits));
}

TruthTable TruthTable::constant(int num_vars, bool value) {
    check_vars(num_vars, kMaxTableVars);
    return TruthTable(num_vars, std::vector<std::uint8_t>(std::size_t{1} << num_vars, value ? 1 : 0));
}

bool TruthTable::at(const BitVec &x) const {
    if (x.width() != num_vars_) {
        throw LengthMismatch("input of width " + std::to_string(x.width()) + " for a function of " +
                             std::to_string(num_vars_) + " variables");
    }
    return (*this)[x.value()];
}

TruthTable TruthTable::complement() const {
    std::vector<std::uint8_t> out(bits_);
    for (auto &b : out) {
        b ^= 1;
    }
    return TruthTable(num_vars_, std::move(out));
}

TruthTable TruthTable::reversed() const {
    return TruthTable(num_vars_, std::vector<std::uint8_t>(bits_.rbegin(), bits_.rend()));
}

TruthTable TruthTable::concat(const TruthTable &tail) const {
    if (tail.num_vars_ != num_vars_) {
        throw LengthMismatch("cannot concatenate tables of different sizes");
    }
    std::vector<std::uint8_t> out(bits_);
    out.insert(out.end(), tail.bits_.begin(), tail.bits_.end());
    return TruthTable(num_vars_ + 1, std::move(out));
}

std::string TruthTable::to_binary() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

std::string TruthTable::to_decimal() const {
    // Little-endian base 1e9 limbs; doubling once per table entry.
    std::vector<std::uint32_t> limbs{0};
    constexpr std::uint64_t kBase = 1000000000;
    for (auto b : bits_) {
        std::uint64_t carry = b;
        for (auto &limb : limbs) {
            std::uint64_t v = std::uint64_t{limb} * 2 + carry;
            limb = static_cast<std::uint32_t>(v % kBase);
            carry = v / kBase;
        }
        if (carry != 0) {
            limbs.push_back(static_cast<std::uint32_t>(carry));
        }
    }
    std::string out = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

std::strong_ordering operator<=>(const TruthTable &a, const TruthTable &b) {
    if (auto c = a.num_vars_ <=> b.num_vars_; c != 0) {
        return c;
    }
    return a.bits_ <=> b.bits_;
}

std::string ParityForm::expression() const {
    std::string terms;
    for (int i = 0; i < mask.width(); i++) {
        if (mask[i]) {
            if (!terms.empty()) {
                terms += " ^ ";
            }
            terms += "x" + std::to_string(i + 1);
        }
    }
    if (terms.empty()) {
        return complement ? "1" : "0";
    }
    return complement ? "~(" + terms + ")" : terms;
}

const char *to_string(FunctionClass c) {
    switch (c) {
        case FunctionClass::Positive:
            return "Positive";
        case FunctionClass::Negative:
            return "Negative";
        case FunctionClass::NotAdmissible:
            return "NotAdmissible";
    }
    return "?";
}

FunctionFamily generate_functions(int num_vars, int max_vars) {
    check_vars(num_vars, std::min(max_vars, kMaxTableVars));
    FunctionFamily family{
        {TruthTable::from_binary("00"), TruthTable::from_binary("01")},
        {TruthTable::from_binary("11"), TruthTable::from_binary("10")},
    };
    for (int level = 1; level < num_vars; level++) {
        std::vector<TruthTable> ordered = family.positives;
        ordered.insert(ordered.end(), family.negatives.begin(), family.negatives.end());
        std::sort(ordered.begin(), ordered.end());

        FunctionFamily next;
        std::size_t count = ordered.size();
        for (std::size_t i = 0; i < count; i++) {
            auto &dest = i < count / 2 ? next.positives : next.negatives;
            dest.push_back(ordered[i].concat(ordered[i]));
            dest.push_back(ordered[i].concat(ordered[count - 1 - i]));
        }
        std::sort(next.negatives.begin(), next.negatives.end());
        family = std::move(next);
    }
    return family;
}

bool is_admissible(const TruthTable &table) {
    return admissible_span(table.bits());
}

ParityForm to_parity_form(const TruthTable &table) {
    int n = table.num_vars();
    bool complement = table[0];
    std::uint64_t mask = 0;
    for (int i = 0; i < n; i++) {
        std::size_t unit = std::size_t{1} << (n - 1 - i);
        if (table[unit] != complement) {
            mask |= unit;
        }
    }
    for (std::size_t x = 0; x < table.size(); x++) {
        if (table[x] != (complement ^ parity_of(x & mask))) {
            throw NotAdmissible(table.to_binary() + " has no parity form (entry " + std::to_string(x) + ")");
        }
    }
    return ParityForm{BitVec(n, mask), complement};
}

TruthTable from_parity_form(const ParityForm &form) {
    int n = form.num_vars();
    check_vars(n, kMaxTableVars);
    std::vector<std::uint8_t> bits(std::size_t{1} << n);
    for (std::size_t x = 0; x < bits.size(); x++) {
        bits[x] = static_cast<std::uint8_t>(form.complement ^ parity_of(x & form.mask.value()));
    }
    return TruthTable(n, std::move(bits));
}

FunctionClass classify(const TruthTable &table) {
    if (!is_admissible(table)) {
        return FunctionClass::NotAdmissible;
    }
    return table[0] ? FunctionClass::Negative : FunctionClass::Positive;
}

std::string hex_encode(const TruthTable &table) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    auto bits = table.bits();
    std::size_t digits = hex_digits_for(table.num_vars());
    std::size_t pad = digits * 4 - bits.size();
    std::string out;
    out.reserve(digits);
    int nibble = 0;
    for (std::size_t i = 0; i < digits * 4; i++) {
        int bit = i < pad ? 0 : bits[i - pad];
        nibble = (nibble << 1) | bit;
        if (i % 4 == 3) {
            out.push_back(kDigits[nibble]);
            nibble = 0;
        }
    }
    return out;
}

TruthTable hex_decode(std::string_view text, int num_vars) {
    check_vars(num_vars, kMaxTableVars);
    bool prefixed = strip_hex_prefix(text);
    if (text.empty()) {
        throw ParseError("empty function string");
    }
    if (!prefixed && is_binary_string(text) && text.size() == (std::size_t{1} << num_vars)) {
        return TruthTable::from_binary(text);
    }
    return decode_hex_digits(text, num_vars);
}

TruthTable parse_function(std::string_view text) {
    bool prefixed = strip_hex_prefix(text);
    if (text.empty()) {
        throw ParseError("empty function string");
    }
    if (!prefixed && is_binary_string(text)) {
        return TruthTable::from_binary(text);
    }
    std::size_t bits = text.size() * 4;
    if (!std::has_single_bit(bits)) {
        throw LengthMismatch("hex function '" + std::string(text) + "' does not encode 2^n entries");
    }
    return decode_hex_digits(text, std::countr_zero(bits));
}

BitVec delta_between(const BitVec &x, const BitVec &y) {
    return x ^ y;
}

bool is_invariant_under(const TruthTable &table, const BitVec &delta) {
    if (delta.width() != table.num_vars()) {
        throw LengthMismatch("shift of width " + std::to_string(delta.width()) + " for a function of " +
                             std::to_string(table.num_vars()) + " variables");
    }
    bool invariant = true;
    for (std::size_t x = 0; x < table.size() && invariant; x++) {
        invariant = table[x] == table[x ^ delta.value()];
    }
    if (is_admissible(table)) {
        bool shortcut = !(delta & to_parity_form(table).mask).parity();
        if (shortcut != invariant) {
            throw std::logic_error("shift invariance disagrees with the parity shortcut for " + table.to_binary());
        }
    }
    return invariant;
}

}  // namespace qtestfn
