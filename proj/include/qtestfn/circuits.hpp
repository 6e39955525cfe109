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

#include <string>
#include <string_view>
#include <vector>

#include "qtestfn/boolfunc.hpp"
#include "qtestfn/statevec.hpp"

namespace qtestfn {

inline constexpr int kMaxEquivalenceQubits = 12;

enum class GateKind { H, X, CNOT };

struct Gate {
    GateKind kind = GateKind::H;
    int target = 0;
    /// Only meaningful for CNOT.
    int control = -1;

    static Gate h(int qubit) {
        return {GateKind::H, qubit, -1};
    }
    static Gate x(int qubit) {
        return {GateKind::X, qubit, -1};
    }
    static Gate cnot(int control, int target) {
        return {GateKind::CNOT, target, control};
    }

    /// "H 0", "X 2", "CNOT 0 2".
    std::string str() const;

    bool operator==(const Gate &) const = default;
};

/// Gates applied left to right on `wires` qubits, followed by a global
/// sign. The sign stands in for the -1 that negative functions put on the
/// output, so gate lists stay free of phase gates.
class Circuit {
   public:
    explicit Circuit(int wires, int global_sign = 1);

    /// Throws BoundsError for out-of-range wires or CNOT control == target.
    Circuit &add(Gate gate);
    Circuit &append(const Circuit &other);
    /// A Hadamard on every wire.
    Circuit &hadamard_layer();

    int wires() const {
        return wires_;
    }
    int global_sign() const {
        return global_sign_;
    }
    void set_global_sign(int sign);
    const std::vector<Gate> &gates() const {
        return gates_;
    }

    /// Header "wires=<k> sign=<+1|-1>" then one gate per line.
    std::string to_text() const;
    static Circuit parse(std::string_view text);

    bool operator==(const Circuit &) const = default;

   private:
    int wires_;
    int global_sign_;
    std::vector<Gate> gates_;
};

/// One CNOT from each masked variable into the ancilla (wire n), plus an X
/// on the ancilla for negative functions. Throws NotAdmissible.
Circuit oracle_as_cnots(const TruthTable &f);

/// H layer, oracle_as_cnots(f), H layer.
Circuit pipeline_circuit(const TruthTable &f);

/// The Hadamard-free equivalent of the pipeline: X on each masked variable,
/// nothing on the ancilla, global sign -1 for negative functions.
Circuit compile_equivalent(const TruthTable &f);

StateVector simulate_circuit(const Circuit &circuit, const BasisKet &input);

/// Which basis inputs an equivalence check ranges over.
enum class InputDomain {
    /// Every computational basis state of the wires.
    AllBasisStates,
    /// Basis states whose last wire (the ancilla) is |1>.
    AncillaOne,
};

/// True iff both circuits give the same vector within `tolerance` on every
/// input of `domain`. Throws LengthMismatch on differing wire counts and
/// SizeCapExceeded above `max_qubits`.
bool assert_equivalent(const Circuit &a, const Circuit &b, InputDomain domain = InputDomain::AllBasisStates,
                       double tolerance = kDefaultTolerance, int max_qubits = kMaxEquivalenceQubits);

}  // namespace qtestfn
