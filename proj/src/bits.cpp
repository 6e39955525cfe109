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

#include "qtestfn/bits.hpp"

#include "qtestfn/errors.hpp"

namespace qtestfn {

namespace {

std::uint64_t low_mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

BitVec::BitVec(int width, std::uint64_t value) : width_(width), value_(value) {
    if (width < 0 || width > kMaxWidth) {
        throw BoundsError("bit vector width " + std::to_string(width) + " is outside 0.." +
                          std::to_string(kMaxWidth));
    }
    if ((value & ~low_mask(width)) != 0) {
        throw BoundsError("value does not fit in " + std::to_string(width) + " bits");
    }
}

BitVec BitVec::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty bit string");
    }
    if (text.size() > static_cast<size_t>(kMaxWidth)) {
        throw ParseError("bit string too long: " + std::string(text));
    }
    std::uint64_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ParseError("not a bit string: '" + std::string(text) + "'");
        }
        value = (value << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitVec(static_cast<int>(text.size()), value);
}

BitVec BitVec::unit(int width, int i) {
    if (i < 0 || i >= width) {
        throw BoundsError("bit index " + std::to_string(i) + " out of range");
    }
    return BitVec(width, std::uint64_t{1} << (width - 1 - i));
}

BitVec BitVec::with(int i, bool bit) const {
    if (i < 0 || i >= width_) {
        throw BoundsError("bit index " + std::to_string(i) + " out of range");
    }
    std::uint64_t m = std::uint64_t{1} << (width_ - 1 - i);
    return BitVec(width_, bit ? (value_ | m) : (value_ & ~m));
}

BitVec BitVec::operator^(const BitVec &other) const {
    if (width_ != other.width_) {
        throw LengthMismatch("bit vectors of width " + std::to_string(width_) + " and " +
                             std::to_string(other.width_));
    }
    return BitVec(width_, value_ ^ other.value_);
}

BitVec BitVec::operator&(const BitVec &other) const {
    if (width_ != other.width_) {
        throw LengthMismatch("bit vectors of width " + std::to_string(width_) + " and " +
                             std::to_string(other.width_));
    }
    return BitVec(width_, value_ & other.value_);
}

BitVec BitVec::concat(const BitVec &other) const {
    return BitVec(width_ + other.width_, (value_ << other.width_) | other.value_);
}

bool BitVec::parity() const {
    return parity_of(value_);
}

std::string BitVec::str() const {
    std::string out(static_cast<size_t>(width_), '0');
    for (int i = 0; i < width_; i++) {
        if ((*this)[i]) {
            out[static_cast<size_t>(i)] = '1';
        }
    }
    return out;
}

}  // namespace qtestfn
