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

#include "qtestfn/pipeline.hpp"

#include <sstream>

#include "qtestfn/errors.hpp"
#include "qtestfn/oracle.hpp"

namespace qtestfn {

namespace {

void check_input(const TruthTable &f, const BasisKet &input) {
    if (input.qubits() != f.num_vars() + 1) {
        throw DimensionMismatch("input " + input.str() + " has " + std::to_string(input.qubits()) +
                                " qubits, the pipeline for n=" + std::to_string(f.num_vars()) + " needs " +
                                std::to_string(f.num_vars() + 1));
    }
    if (!input.bits[input.qubits() - 1]) {
        throw BoundsError("pipeline input " + input.str() + " must end in the ancilla bit 1");
    }
}

// One Hadamard layer, optionally missing one qubit. Returns how many
// unscaled butterflies were applied.
int hadamard_layer(std::span<double> amps, int qubits, int skip_qubit) {
    int applied = 0;
    for (int q = 0; q < qubits; q++) {
        if (q != skip_qubit) {
            kernels::hadamard_unscaled(amps, qubits, q);
            applied++;
        }
    }
    return applied;
}

std::vector<double> simulate(const TruthTable &f, const BasisKet &input, const std::optional<Fault> &fault) {
    int k = f.num_vars() + 1;
    std::vector<double> amps(std::size_t{1} << k, 0.0);
    amps[input.bits.value()] = input.sign;

    auto skip_in = [&](Layer layer) {
        if (fault) {
            if (auto *s = std::get_if<SkipHadamard>(&*fault); s && s->layer == layer) {
                return s->qubit;
            }
        }
        return -1;
    };
    auto rotate_after = [&](Layer layer) {
        if (fault) {
            if (auto *r = std::get_if<RotateQubit>(&*fault); r && r->layer == layer) {
                kernels::rotate(amps, k, r->qubit, r->angle);
            }
        }
    };

    TruthTable oracle_table = f;
    if (fault) {
        if (auto *c = std::get_if<CorruptOracleEntry>(&*fault)) {
            std::vector<std::uint8_t> bits(f.bits().begin(), f.bits().end());
            bits[c->index] ^= 1;
            oracle_table = TruthTable(f.num_vars(), std::move(bits));
        }
    }

    int half_powers = hadamard_layer(amps, k, skip_in(Layer::First));
    rotate_after(Layer::First);
    QuantumOracle(oracle_table).apply_inplace(amps);
    half_powers += hadamard_layer(amps, k, skip_in(Layer::Second));
    kernels::scale_half_powers(amps, half_powers);
    rotate_after(Layer::Second);
    return amps;
}

void check_fault(const TruthTable &f, const Fault &fault) {
    int k = f.num_vars() + 1;
    auto check_qubit = [&](int q) {
        if (q < 0 || q >= k) {
            throw InvalidFault("fault qubit " + std::to_string(q) + " is outside 0.." + std::to_string(k - 1));
        }
    };
    std::visit(
        [&](const auto &spec) {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, CorruptOracleEntry>) {
                if (spec.index >= f.size()) {
                    throw InvalidFault("truth-table index " + std::to_string(spec.index) + " is outside 0.." +
                                       std::to_string(f.size() - 1));
                }
            } else {
                check_qubit(spec.qubit);
            }
        },
        fault);
}

Layer parse_layer(std::string_view s) {
    if (s == "first") {
        return Layer::First;
    }
    if (s == "second") {
        return Layer::Second;
    }
    throw ParseError("fault layer must be 'first' or 'second', got '" + std::string(s) + "'");
}

const char *layer_name(Layer layer) {
    return layer == Layer::First ? "first" : "second";
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

long parse_integer(const std::string &s) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception &) {
        throw ParseError("not an integer: '" + s + "'");
    }
    if (used != s.size()) {
        throw ParseError("not an integer: '" + s + "'");
    }
    return v;
}

}  // namespace

StateVector pipeline_state(const TruthTable &f, const BasisKet &input) {
    check_input(f, input);
    return StateVector(simulate(f, input, std::nullopt));
}

PipelineResult run(const TruthTable &f, const BasisKet &input, double tolerance) {
    BasisKet out = vector_to_ket(pipeline_state(f, input), tolerance);
    return PipelineResult{out, out.bits[out.qubits() - 1]};
}

PipelineResult predict(const TruthTable &f, const BasisKet &input) {
    check_input(f, input);
    ParityForm form = to_parity_form(f);
    BitVec shift = form.mask.concat(BitVec::zeros(1));
    int sign = form.complement ? -input.sign : input.sign;
    return PipelineResult{BasisKet(sign, input.bits ^ shift), true};
}

TruthTable solve_function(const BasisKet &input, const BasisKet &desired) {
    if (input.qubits() != desired.qubits()) {
        throw LengthMismatch("input " + input.str() + " and output " + desired.str() + " differ in width");
    }
    int k = input.qubits();
    if (k < 2) {
        throw BoundsError("states need at least one data qubit and the ancilla");
    }
    if (!input.bits[k - 1] || !desired.bits[k - 1]) {
        throw BoundsError("both states must end in the ancilla bit 1");
    }
    BitVec delta = delta_between(input.bits, desired.bits);
    BitVec mask(k - 1, delta.value() >> 1);
    return from_parity_form(ParityForm{mask, input.sign != desired.sign});
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    for (const auto &line : failures) {
        out << line << '\n';
    }
    out << (ok() ? "PASS " : "FAIL ") << passed << '/' << total << '\n';
    return out.str();
}

VerifyReport verify_all(int num_vars, int max_vars) {
    if (num_vars < 1 || num_vars > max_vars) {
        throw BoundsError("verify sweep n=" + std::to_string(num_vars) + " is outside 1.." + std::to_string(max_vars));
    }
    FunctionFamily family = generate_functions(num_vars);
    std::vector<TruthTable> functions = family.positives;
    functions.insert(functions.end(), family.negatives.begin(), family.negatives.end());

    VerifyReport report;
    report.num_vars = num_vars;
    std::uint64_t inputs = std::uint64_t{1} << num_vars;
    for (const auto &f : functions) {
        for (int sign : {1, -1}) {
            for (std::uint64_t x = 0; x < inputs; x++) {
                BasisKet input(sign, BitVec(num_vars, x).concat(BitVec(1, 1)));
                PipelineResult want = predict(f, input);
                std::string got;
                bool pass = false;
                try {
                    PipelineResult r = run(f, input);
                    pass = r == want && r.ancilla_ok;
                    got = r.output.str() + (r.ancilla_ok ? "" : "(ancilla lost)");
                } catch (const NotBasisState &) {
                    got = "NotBasisState";
                }
                report.total++;
                if (pass) {
                    report.passed++;
                } else {
                    report.failures.push_back("f=" + hex_encode(f) + " x=" + input.str() + " got=" + got +
                                              " want=" + want.output.str());
                }
            }
        }
    }
    return report;
}

std::optional<Fault> parse_fault(std::string_view text) {
    if (text == "none") {
        return std::nullopt;
    }
    auto parts = split(text, ':');
    const std::string &kind = parts[0];
    if (kind == "skip" && parts.size() == 3) {
        return SkipHadamard{parse_layer(parts[1]), static_cast<int>(parse_integer(parts[2]))};
    }
    if (kind == "rotate" && parts.size() == 4) {
        std::size_t used = 0;
        double angle = 0;
        try {
            angle = std::stod(parts[3], &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != parts[3].size()) {
            throw ParseError("not an angle: '" + parts[3] + "'");
        }
        return RotateQubit{parse_layer(parts[1]), static_cast<int>(parse_integer(parts[2])), angle};
    }
    if (kind == "corrupt" && parts.size() == 2) {
        long index = parse_integer(parts[1]);
        if (index < 0) {
            throw ParseError("truth-table index must be non-negative");
        }
        return CorruptOracleEntry{static_cast<std::size_t>(index)};
    }
    throw ParseError("unknown fault spec '" + std::string(text) +
                     "' (expected none, skip:<layer>:<q>, rotate:<layer>:<q>:<rad> or corrupt:<i>)");
}

std::string to_string(const Fault &fault) {
    return std::visit(
        [](const auto &spec) -> std::string {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, SkipHadamard>) {
                return std::string("skip:") + layer_name(spec.layer) + ":" + std::to_string(spec.qubit);
            } else if constexpr (std::is_same_v<T, RotateQubit>) {
                std::ostringstream out;
                out << "rotate:" << layer_name(spec.layer) << ':' << spec.qubit << ':' << spec.angle;
                return out.str();
            } else {
                return "corrupt:" + std::to_string(spec.index);
            }
        },
        fault);
}

double success_probability(const TruthTable &f, const BasisKet &input, const std::optional<Fault> &fault) {
    PipelineResult want = predict(f, input);
    if (fault) {
        check_fault(f, *fault);
    }
    std::vector<double> amps = simulate(f, input, fault);
    double overlap = amps[want.output.bits.value()] * want.output.sign;
    return overlap * overlap;
}

}  // namespace qtestfn
