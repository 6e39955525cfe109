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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qtestfn/boolfunc.hpp"
#include "qtestfn/statevec.hpp"

namespace qtestfn {

// The pipeline is H on all n+1 qubits, then U_f, then H on all qubits again,
// applied to a signed basis input |x, 1>. For an admissible f it lands on a
// single signed basis state.

struct PipelineResult {
    BasisKet output;
    /// The ancilla (last) qubit came back as 1.
    bool ancilla_ok = false;

    bool operator==(const PipelineResult &) const = default;
};

/// Full output vector of the pipeline. Normalization is applied once after
/// both Hadamard layers, so basis outputs are exact.
StateVector pipeline_state(const TruthTable &f, const BasisKet &input);

/// Simulates the pipeline. Throws NotBasisState when the output is not a
/// signed basis state, which happens exactly when f is not admissible.
PipelineResult run(const TruthTable &f, const BasisKet &input, double tolerance = kDefaultTolerance);

/// Analytic output without simulation: bits x XOR mask, ancilla 1, sign
/// multiplied by -1 for negative functions. Throws NotAdmissible.
PipelineResult predict(const TruthTable &f, const BasisKet &input);

/// The unique admissible function taking `input` to `desired`.
TruthTable solve_function(const BasisKet &input, const BasisKet &desired);

struct VerifyReport {
    int num_vars = 0;
    std::size_t passed = 0;
    std::size_t total = 0;
    /// "f=<hex> x=<signed bits> got=<...> want=<...>"
    std::vector<std::string> failures;

    bool ok() const {
        return passed == total;
    }
    /// Failure lines followed by "PASS k/k" or "FAIL j/k".
    std::string to_text() const;
};

inline constexpr int kMaxVerifyVars = 6;

/// Compares run against predict for every admissible f on n variables and
/// every signed input |x, 1>.
VerifyReport verify_all(int num_vars, int max_vars = kMaxVerifyVars);

enum class Layer { First, Second };

/// Leaves out the Hadamard on one qubit in one layer.
struct SkipHadamard {
    Layer layer = Layer::First;
    int qubit = 0;
};

/// Applies a real rotation by `angle` radians to one qubit directly after
/// the given Hadamard layer.
struct RotateQubit {
    Layer layer = Layer::First;
    int qubit = 0;
    double angle = 0;
};

/// Flips one truth-table entry inside the oracle.
struct CorruptOracleEntry {
    std::size_t index = 0;
};

using Fault = std::variant<SkipHadamard, RotateQubit, CorruptOracleEntry>;

/// Parses "none", "skip:<first|second>:<qubit>",
/// "rotate:<first|second>:<qubit>:<radians>" or "corrupt:<index>".
std::optional<Fault> parse_fault(std::string_view text);
std::string to_string(const Fault &fault);

/// Squared overlap between the (possibly faulted) pipeline output and the
/// predicted basis state. Exactly 1 without a fault. Throws InvalidFault
/// when the fault's indices do not fit f.
double success_probability(const TruthTable &f, const BasisKet &input, const std::optional<Fault> &fault);

}  // namespace qtestfn
