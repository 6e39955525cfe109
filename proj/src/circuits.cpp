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

#include "qtestfn/circuits.hpp"

#include <optional>
#include <sstream>

#include "qtestfn/errors.hpp"

namespace qtestfn {

namespace {

int parse_int(const std::string &s, std::string_view line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw ParseError("bad integer in circuit line '" + std::string(line) + "'");
    }
    return v;
}

}  // namespace

std::string Gate::str() const {
    switch (kind) {
        case GateKind::H:
            return "H " + std::to_string(target);
        case GateKind::X:
            return "X " + std::to_string(target);
        case GateKind::CNOT:
            return "CNOT " + std::to_string(control) + " " + std::to_string(target);
    }
    return "?";
}

Circuit::Circuit(int wires, int global_sign) : wires_(wires), global_sign_(1) {
    if (wires < 1 || wires > kMaxStateQubits) {
        throw BoundsError("circuit wire count " + std::to_string(wires) + " is outside 1.." +
                          std::to_string(kMaxStateQubits));
    }
    set_global_sign(global_sign);
}

void Circuit::set_global_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw BoundsError("global sign must be +1 or -1");
    }
    global_sign_ = sign;
}

Circuit &Circuit::add(Gate gate) {
    auto check = [&](int q) {
        if (q < 0 || q >= wires_) {
            throw BoundsError("gate '" + gate.str() + "' uses wire " + std::to_string(q) + " of " +
                              std::to_string(wires_));
        }
    };
    check(gate.target);
    if (gate.kind == GateKind::CNOT) {
        check(gate.control);
        if (gate.control == gate.target) {
            throw BoundsError("CNOT control and target must differ");
        }
    } else {
        gate.control = -1;
    }
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.wires_ != wires_) {
        throw LengthMismatch("cannot append a circuit on " + std::to_string(other.wires_) + " wires to one on " +
                             std::to_string(wires_));
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    global_sign_ *= other.global_sign_;
    return *this;
}

Circuit &Circuit::hadamard_layer() {
    for (int q = 0; q < wires_; q++) {
        add(Gate::h(q));
    }
    return *this;
}

std::string Circuit::to_text() const {
    std::string out = "wires=" + std::to_string(wires_) + " sign=" + (global_sign_ < 0 ? "-1" : "+1") + "\n";
    for (const auto &g : gates_) {
        out += g.str() + "\n";
    }
    return out;
}

Circuit Circuit::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        if (!circuit) {
            if (tok.size() != 2 || !tok[0].starts_with("wires=") || !tok[1].starts_with("sign=")) {
                throw ParseError("expected header 'wires=<k> sign=<+1|-1>', got '" + line + "'");
            }
            circuit.emplace(parse_int(tok[0].substr(6), line), parse_int(tok[1].substr(5), line));
            continue;
        }
        if (tok[0] == "H" && tok.size() == 2) {
            circuit->add(Gate::h(parse_int(tok[1], line)));
        } else if (tok[0] == "X" && tok.size() == 2) {
            circuit->add(Gate::x(parse_int(tok[1], line)));
        } else if (tok[0] == "CNOT" && tok.size() == 3) {
            circuit->add(Gate::cnot(parse_int(tok[1], line), parse_int(tok[2], line)));
        } else {
            throw ParseError("unknown gate line '" + line + "'");
        }
    }
    if (!circuit) {
        throw ParseError("empty circuit text");
    }
    return *circuit;
}

Circuit oracle_as_cnots(const TruthTable &f) {
    ParityForm form = to_parity_form(f);
    int n = f.num_vars();
    Circuit c(n + 1);
    for (int i = 0; i < n; i++) {
        if (form.mask[i]) {
            c.add(Gate::cnot(i, n));
        }
    }
    if (form.complement) {
        c.add(Gate::x(n));
    }
    return c;
}

Circuit pipeline_circuit(const TruthTable &f) {
    Circuit c(f.num_vars() + 1);
    c.hadamard_layer();
    c.append(oracle_as_cnots(f));
    c.hadamard_layer();
    return c;
}

Circuit compile_equivalent(const TruthTable &f) {
    ParityForm form = to_parity_form(f);
    Circuit c(f.num_vars() + 1, form.complement ? -1 : 1);
    for (int i = 0; i < f.num_vars(); i++) {
        if (form.mask[i]) {
            c.add(Gate::x(i));
        }
    }
    return c;
}

StateVector simulate_circuit(const Circuit &circuit, const BasisKet &input) {
    if (input.qubits() != circuit.wires()) {
        throw DimensionMismatch("input " + input.str() + " has " + std::to_string(input.qubits()) +
                                " qubits, circuit has " + std::to_string(circuit.wires()) + " wires");
    }
    int k = circuit.wires();
    std::vector<double> amps(std::size_t{1} << k, 0.0);
    amps[input.bits.value()] = input.sign * circuit.global_sign();
    int half_powers = 0;
    for (const auto &g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::H:
                kernels::hadamard_unscaled(amps, k, g.target);
                half_powers++;
                break;
            case GateKind::X:
                kernels::pauli_x(amps, k, g.target);
                break;
            case GateKind::CNOT:
                kernels::cnot(amps, k, g.control, g.target);
                break;
        }
    }
    kernels::scale_half_powers(amps, half_powers);
    return StateVector(std::move(amps));
}

bool assert_equivalent(const Circuit &a, const Circuit &b, InputDomain domain, double tolerance, int max_qubits) {
    if (a.wires() != b.wires()) {
        throw LengthMismatch("circuits have " + std::to_string(a.wires()) + " and " + std::to_string(b.wires()) +
                             " wires");
    }
    int k = a.wires();
    if (k > max_qubits) {
        throw SizeCapExceeded("equivalence check on " + std::to_string(k) + " qubits exceeds the cap of " +
                              std::to_string(max_qubits));
    }
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); x++) {
        if (domain == InputDomain::AncillaOne && (x & 1) == 0) {
            continue;
        }
        BasisKet input(1, BitVec(k, x));
        if (simulate_circuit(a, input).max_abs_diff(simulate_circuit(b, input)) > tolerance) {
            return false;
        }
    }
    return true;
}

}  // namespace qtestfn
