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
#include <span>
#include <string>
#include <vector>

#include "qtestfn/boolfunc.hpp"
#include "qtestfn/statevec.hpp"

namespace qtestfn {

/// Largest qubit count for which an oracle matrix is materialized.
inline constexpr int kMaxMatrixQubits = 12;

/// Square matrix of 0/1 entries, row-major.
struct BinaryMatrix {
    std::size_t dim = 0;
    std::vector<std::uint8_t> entries;

    std::uint8_t at(std::size_t row, std::size_t col) const {
        return entries[row * dim + col];
    }
    /// Rows of space-separated 0/1, one per line.
    std::string to_text() const;
};

/// U_f |x, k> = |x, k XOR f(x)> on n+1 qubits; the last qubit is the ancilla.
///
/// In the amplitude index the ancilla is the low bit, so U_f swaps the pair
/// (2t, 2t+1) for every t with f(t) = 1 and leaves the rest alone.
class QuantumOracle {
   public:
    explicit QuantumOracle(TruthTable function);

    const TruthTable &function() const {
        return function_;
    }
    int qubits() const {
        return function_.num_vars() + 1;
    }
    std::size_t dimension() const {
        return function_.size() * 2;
    }
    /// Index of the basis state that `basis_index` is mapped to.
    std::size_t image(std::size_t basis_index) const {
        return basis_index ^ static_cast<std::size_t>(function_[basis_index >> 1]);
    }

    StateVector apply(const StateVector &v) const;
    /// Swaps in place. The caller must hold the only reference to `amps`.
    void apply_inplace(std::span<double> amps) const;

    /// Throws SizeCapExceeded when qubits() > max_qubits.
    BinaryMatrix matrix(int max_qubits = kMaxMatrixQubits) const;

    bool is_involution() const;

   private:
    TruthTable function_;
};

}  // namespace qtestfn
