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

#include "qtestfn/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qtestfn/errors.hpp"

namespace qtestfn {

namespace {

void check_qubit(int num_qubits, int qubit) {
    if (qubit < 0 || qubit >= num_qubits) {
        throw BoundsError("qubit " + std::to_string(qubit) + " out of range for " + std::to_string(num_qubits) +
                          " qubits");
    }
}

std::size_t stride_of(int num_qubits, int qubit) {
    return std::size_t{1} << (num_qubits - 1 - qubit);
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string &token) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception &) {
        throw ParseError("not a number: '" + token + "'");
    }
    if (used != token.size()) {
        throw ParseError("not a number: '" + token + "'");
    }
    return v;
}

}  // namespace

BasisKet::BasisKet(int sign, BitVec bits) : sign(sign), bits(bits) {
    if (sign != 1 && sign != -1) {
        throw BoundsError("ket sign must be +1 or -1");
    }
    if (bits.width() < 1) {
        throw BoundsError("ket needs at least one qubit");
    }
}

BasisKet BasisKet::parse(std::string_view text) {
    int sign = 1;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        sign = text.front() == '-' ? -1 : 1;
        text.remove_prefix(1);
    }
    return BasisKet(sign, BitVec::parse(text));
}

std::string BasisKet::str() const {
    return (sign < 0 ? "-" : "+") + bits.str();
}

StateVector::StateVector(std::vector<double> amplitudes, double norm_tolerance)
    : qubits_(0), amplitudes_(std::move(amplitudes)) {
    std::size_t n = amplitudes_.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw DimensionMismatch("state vector length " + std::to_string(n) + " is not 2^k with k >= 1");
    }
    qubits_ = std::countr_zero(n);
    if (qubits_ > kMaxStateQubits) {
        throw BoundsError("state vector of " + std::to_string(qubits_) + " qubits exceeds the cap of " +
                          std::to_string(kMaxStateQubits));
    }
    double norm2 = 0;
    for (double a : amplitudes_) {
        norm2 += a * a;
    }
    if (std::abs(norm2 - 1.0) > norm_tolerance) {
        throw BoundsError("state vector norm^2 is " + std::to_string(norm2) + ", not 1");
    }
}

StateVector StateVector::operator-() const {
    std::vector<double> out(amplitudes_);
    for (double &a : out) {
        a = -a;
    }
    return StateVector(std::move(out));
}

double StateVector::max_abs_diff(const StateVector &other) const {
    if (other.size() != size()) {
        throw DimensionMismatch("cannot compare vectors of length " + std::to_string(size()) + " and " +
                                std::to_string(other.size()));
    }
    double worst = 0;
    for (std::size_t i = 0; i < size(); i++) {
        worst = std::max(worst, std::abs(amplitudes_[i] - other.amplitudes_[i]));
    }
    return worst;
}

StateVector ket_to_vector(const BasisKet &ket) {
    if (ket.qubits() > kMaxStateQubits) {
        throw BoundsError("ket of " + std::to_string(ket.qubits()) + " qubits exceeds the cap of " +
                          std::to_string(kMaxStateQubits));
    }
    std::vector<double> amps(std::size_t{1} << ket.qubits(), 0.0);
    amps[ket.bits.value()] = ket.sign;
    return StateVector(std::move(amps));
}

BasisKet vector_to_ket(const StateVector &v, double tolerance) {
    std::size_t hit = v.size();
    for (std::size_t i = 0; i < v.size(); i++) {
        double mag = std::abs(v[i]);
        if (mag <= tolerance) {
            continue;
        }
        if (std::abs(mag - 1.0) > tolerance || hit != v.size()) {
            throw NotBasisState("state " + format_vector(v, tolerance) + " is not a basis state");
        }
        hit = i;
    }
    if (hit == v.size()) {
        throw NotBasisState("state has no unit amplitude");
    }
    return BasisKet(v[hit] < 0 ? -1 : 1, BitVec(v.qubits(), hit));
}

StateVector hadamard_all(const StateVector &v) {
    std::vector<double> amps(v.amplitudes().begin(), v.amplitudes().end());
    for (int q = 0; q < v.qubits(); q++) {
        kernels::hadamard_unscaled(amps, v.qubits(), q);
    }
    kernels::scale_half_powers(amps, v.qubits());
    return StateVector(std::move(amps));
}

std::vector<double> kron(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double x : a) {
        for (double y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

std::vector<QubitFactor> factor_product_state(const StateVector &v, double tolerance) {
    int k = v.qubits();
    auto amps = v.amplitudes();
    std::size_t pivot = static_cast<std::size_t>(
        std::max_element(amps.begin(), amps.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }) -
        amps.begin());

    // For a product state, the amplitudes along each qubit's axis through the
    // pivot are proportional to that qubit's factor.
    std::vector<QubitFactor> factors;
    factors.reserve(static_cast<std::size_t>(k));
    double pivot_product = 1.0;
    for (int q = 0; q < k; q++) {
        std::size_t stride = stride_of(k, q);
        std::size_t base = pivot & ~stride;
        QubitFactor f{amps[base], amps[base | stride]};
        double norm = std::hypot(f[0], f[1]);
        int pivot_bit = (pivot & stride) ? 1 : 0;
        // Orient each factor so the pivot component is positive.
        double orient = f[pivot_bit] < 0 ? -1.0 : 1.0;
        f = {orient * f[0] / norm, orient * f[1] / norm};
        pivot_product *= f[pivot_bit];
        factors.push_back(f);
    }
    double sign = amps[pivot] / pivot_product < 0 ? -1.0 : 1.0;
    factors[0] = {sign * factors[0][0], sign * factors[0][1]};

    std::vector<double> rebuilt{factors[0][0], factors[0][1]};
    for (int q = 1; q < k; q++) {
        rebuilt = kron(rebuilt, factors[static_cast<std::size_t>(q)]);
    }
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (std::abs(rebuilt[i] - amps[i]) > tolerance) {
            throw Entangled("state " + format_vector(v, tolerance) + " is not a product of single-qubit states");
        }
    }
    return factors;
}

std::string format_vector(const StateVector &v, double tolerance) {
    std::size_t dim = v.size();
    double unit = 1.0 / std::sqrt(static_cast<double>(dim));
    bool rational = std::all_of(v.amplitudes().begin(), v.amplitudes().end(), [&](double a) {
        return std::abs(a) <= tolerance || std::abs(std::abs(a) - unit) <= tolerance;
    });
    // A basis state is also printed in integer form.
    bool basis = std::count_if(v.amplitudes().begin(), v.amplitudes().end(),
                               [&](double a) { return std::abs(std::abs(a) - 1.0) <= tolerance; }) == 1;
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < dim; i++) {
        if (i) {
            out << ' ';
        }
        double a = v[i];
        if (rational || basis) {
            double scaled = basis ? a : a / unit;
            long r = std::lround(scaled);
            out << (std::abs(scaled) <= tolerance ? 0 : r);
        } else {
            out << a;
        }
    }
    out << ')';
    if (rational && !basis) {
        out << "/sqrt(" << dim << ')';
    }
    return out.str();
}

StateVector parse_vector(std::string_view text) {
    std::string s = trim(text);
    double divisor = 1.0;
    auto close = s.find(')');
    if (!s.empty() && s.front() == '(') {
        if (close == std::string::npos) {
            throw ParseError("unbalanced parenthesis in '" + s + "'");
        }
        std::string tail = trim(std::string_view(s).substr(close + 1));
        s = s.substr(1, close - 1);
        if (!tail.empty()) {
            std::string_view t = tail;
            if (t.front() != '/') {
                throw ParseError("expected '/sqrt(N)' after vector, got '" + tail + "'");
            }
            t.remove_prefix(1);
            std::string radicand;
            if (t.starts_with("sqrt(") && t.ends_with(")")) {
                radicand = std::string(t.substr(5, t.size() - 6));
            } else if (t.starts_with("√")) {
                radicand = std::string(t.substr(std::string_view("√").size()));
                if (radicand.size() >= 2 && radicand.front() == '(' && radicand.back() == ')') {
                    radicand = radicand.substr(1, radicand.size() - 2);
                }
            } else {
                throw ParseError("expected '/sqrt(N)' after vector, got '" + tail + "'");
            }
            divisor = std::sqrt(parse_double(trim(radicand)));
        }
    }
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<double> amps;
    std::string token;
    while (in >> token) {
        amps.push_back(parse_double(token) / divisor);
    }
    return StateVector(std::move(amps));
}

namespace kernels {

void hadamard_unscaled(std::span<double> amps, int num_qubits, int qubit) {
    check_qubit(num_qubits, qubit);
    std::size_t stride = stride_of(num_qubits, qubit);
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (i & stride) {
            continue;
        }
        double a = amps[i];
        double b = amps[i | stride];
        amps[i] = a + b;
        amps[i | stride] = a - b;
    }
}

void pauli_x(std::span<double> amps, int num_qubits, int qubit) {
    check_qubit(num_qubits, qubit);
    std::size_t stride = stride_of(num_qubits, qubit);
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (!(i & stride)) {
            std::swap(amps[i], amps[i | stride]);
        }
    }
}

void cnot(std::span<double> amps, int num_qubits, int control, int target) {
    check_qubit(num_qubits, control);
    check_qubit(num_qubits, target);
    if (control == target) {
        throw BoundsError("CNOT control and target must differ");
    }
    std::size_t c = stride_of(num_qubits, control);
    std::size_t t = stride_of(num_qubits, target);
    for (std::size_t i = 0; i < amps.size(); i++) {
        if ((i & c) && !(i & t)) {
            std::swap(amps[i], amps[i | t]);
        }
    }
}

void rotate(std::span<double> amps, int num_qubits, int qubit, double angle) {
    check_qubit(num_qubits, qubit);
    std::size_t stride = stride_of(num_qubits, qubit);
    double c = std::cos(angle);
    double s = std::sin(angle);
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (i & stride) {
            continue;
        }
        double a = amps[i];
        double b = amps[i | stride];
        amps[i] = c * a - s * b;
        amps[i | stride] = s * a + c * b;
    }
}

void scale_half_powers(std::span<double> amps, int half_powers) {
    double factor = half_powers % 2 == 0 ? std::ldexp(1.0, -half_powers / 2)
                                         : 1.0 / std::sqrt(std::ldexp(1.0, half_powers));
    for (double &a : amps) {
        a *= factor;
    }
}

}  // namespace kernels

}  // namespace qtestfn
