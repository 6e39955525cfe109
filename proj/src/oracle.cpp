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

#include "qtestfn/oracle.hpp"

#include <algorithm>

#include "qtestfn/errors.hpp"

namespace qtestfn {

std::string BinaryMatrix::to_text() const {
    std::string out;
    out.reserve(dim * dim * 2);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            if (c) {
                out.push_back(' ');
            }
            out.push_back(at(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

QuantumOracle::QuantumOracle(TruthTable function) : function_(std::move(function)) {
    if (qubits() > kMaxStateQubits) {
        throw BoundsError("oracle on " + std::to_string(qubits()) + " qubits exceeds the cap of " +
                          std::to_string(kMaxStateQubits));
    }
}

StateVector QuantumOracle::apply(const StateVector &v) const {
    std::vector<double> amps(v.amplitudes().begin(), v.amplitudes().end());
    apply_inplace(amps);
    return StateVector(std::move(amps));
}

void QuantumOracle::apply_inplace(std::span<double> amps) const {
    if (amps.size() != dimension()) {
        throw DimensionMismatch("oracle of dimension " + std::to_string(dimension()) + " applied to a vector of " +
                                std::to_string(amps.size()) + " amplitudes");
    }
    for (std::size_t t = 0; t < function_.size(); t++) {
        if (function_[t]) {
            std::swap(amps[2 * t], amps[2 * t + 1]);
        }
    }
}

BinaryMatrix QuantumOracle::matrix(int max_qubits) const {
    if (qubits() > max_qubits) {
        throw SizeCapExceeded("oracle matrix on " + std::to_string(qubits()) + " qubits exceeds the cap of " +
                              std::to_string(max_qubits));
    }
    BinaryMatrix m{dimension(), std::vector<std::uint8_t>(dimension() * dimension(), 0)};
    // Column j is U_f applied to basis vector j.
    for (std::size_t col = 0; col < m.dim; col++) {
        m.entries[image(col) * m.dim + col] = 1;
    }
    return m;
}

bool QuantumOracle::is_involution() const {
    for (std::size_t i = 0; i < dimension(); i++) {
        if (image(image(i)) != i) {
            return false;
        }
    }
    return true;
}

}  // namespace qtestfn
