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

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtestfn/bits.hpp"

namespace qtestfn {

/// Largest qubit count of a materialized state vector (2^20 doubles).
inline constexpr int kMaxStateQubits = 20;
inline constexpr double kDefaultTolerance = 1e-9;

/// A computational basis state with a global sign, e.g. -|0,1,1>.
struct BasisKet {
    int sign = 1;
    BitVec bits;

    BasisKet() = default;
    BasisKet(int sign, BitVec bits);

    /// Parses "+101", "-00101" or an unsigned "101".
    static BasisKet parse(std::string_view text);

    int qubits() const {
        return bits.width();
    }
    BasisKet negated() const {
        return BasisKet(-sign, bits);
    }
    /// "+101" / "-101".
    std::string str() const;

    bool operator==(const BasisKet &) const = default;
};

/// Real amplitudes over k qubits. All gates used here (H, X, CNOT, U_f and
/// the rotation fault) are real, so complex phases are not representable.
///
/// Qubit 0 is the leftmost ket label and the most significant bit of the
/// amplitude index.
class StateVector {
   public:
    /// Throws DimensionMismatch unless the length is 2^k with 1 <= k <= 20,
    /// and BoundsError unless the norm is 1 within `norm_tolerance`.
    explicit StateVector(std::vector<double> amplitudes, double norm_tolerance = kDefaultTolerance);

    int qubits() const {
        return qubits_;
    }
    std::size_t size() const {
        return amplitudes_.size();
    }
    double operator[](std::size_t i) const {
        return amplitudes_[i];
    }
    std::span<const double> amplitudes() const {
        return amplitudes_;
    }
    StateVector operator-() const;

    /// Largest |a_i - b_i|; throws DimensionMismatch on size mismatch.
    double max_abs_diff(const StateVector &other) const;

    bool operator==(const StateVector &) const = default;

   private:
    int qubits_;
    std::vector<double> amplitudes_;
};

StateVector ket_to_vector(const BasisKet &ket);

/// Throws NotBasisState unless exactly one amplitude is +-1 within
/// `tolerance` and every other one is 0 within `tolerance`.
BasisKet vector_to_ket(const StateVector &v, double tolerance = kDefaultTolerance);

/// Applies the Hadamard gate to every qubit.
StateVector hadamard_all(const StateVector &v);

/// Single-qubit amplitudes (a|0> + b|1>).
using QubitFactor = std::array<double, 2>;

/// Per-qubit factors whose Kronecker product reproduces `v`. Each factor has
/// unit norm; the overall sign is carried by the first factor. Throws
/// Entangled when the reconstruction misses by more than `tolerance`.
std::vector<QubitFactor> factor_product_state(const StateVector &v, double tolerance = kDefaultTolerance);

std::vector<double> kron(std::span<const double> a, std::span<const double> b);

/// "(1 -1 1 -1)/sqrt(4)" when every amplitude is 0 or +-1/sqrt(2^k) within
/// `tolerance`, otherwise "(0.5 0.5 ...)" in decimal.
std::string format_vector(const StateVector &v, double tolerance = kDefaultTolerance);

/// Inverse of format_vector. Also accepts comma separators and "/√N".
StateVector parse_vector(std::string_view text);

/// In-place gate kernels over raw amplitude buffers of `num_qubits` qubits.
/// The Hadamard kernel omits the 1/sqrt(2) factor so that sequences of
/// Hadamards can be normalized once, exactly, by `scale_half_powers`.
namespace kernels {

void hadamard_unscaled(std::span<double> amps, int num_qubits, int qubit);
void pauli_x(std::span<double> amps, int num_qubits, int qubit);
void cnot(std::span<double> amps, int num_qubits, int control, int target);
/// Real rotation [[cos, -sin], [sin, cos]] on one qubit.
void rotate(std::span<double> amps, int num_qubits, int qubit, double angle);
/// Multiplies by 2^(-half_powers / 2). Exact when half_powers is even.
void scale_half_powers(std::span<double> amps, int half_powers);

}  // namespace kernels

}  // namespace qtestfn
