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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qtestfn/boolfunc.hpp"
#include "qtestfn/charts.hpp"
#include "qtestfn/circuits.hpp"
#include "qtestfn/cli.hpp"
#include "qtestfn/errors.hpp"
#include "qtestfn/oracle.hpp"
#include "qtestfn/pipeline.hpp"
#include "qtestfn/statevec.hpp"
#include "reference.hpp"

using namespace qtestfn;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string &why) {
        if (ok) {
            detail = why;
        }
        ok = false;
    }
    void expect(bool cond, const std::string &why) {
        if (!cond) {
            fail(why);
        }
    }
};

struct Criterion {
    int id;
    const char *title;
    std::function<Outcome()> check;
};

TruthTable tt(const std::string &bits) {
    return TruthTable::from_binary(bits);
}

std::string listing(const std::vector<TruthTable> &tables) {
    std::string s;
    for (const auto &t : tables) {
        s += (s.empty() ? "(" : ", (") + t.to_binary() + ")";
    }
    return s;
}

std::vector<TruthTable> admissible(int n) {
    FunctionFamily fam = generate_functions(n);
    std::vector<TruthTable> all = fam.positives;
    all.insert(all.end(), fam.negatives.begin(), fam.negatives.end());
    return all;
}

std::vector<BasisKet> signed_inputs(int n) {
    std::vector<BasisKet> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x++) {
        for (int sign : {1, -1}) {
            out.emplace_back(sign, BitVec(n + 1, (x << 1) | 1));
        }
    }
    return out;
}

std::vector<double> scaled(const std::vector<int> &pattern, double denom) {
    std::vector<double> v;
    for (int p : pattern) {
        v.push_back(p / denom);
    }
    return v;
}

bool same(std::span<const double> a, const std::vector<double> &b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); i++) {
        if (std::abs(a[i] - b[i]) > tol) {
            return false;
        }
    }
    return true;
}

Outcome generation_listings() {
    struct Listing {
        int n;
        const char *positives;
        const char *negatives;
    };
    const Listing expected[] = {
        {1, "(00), (01)", "(11), (10)"},
        {2, "(0000), (0011), (0101), (0110)", "(1010), (1001), (1100), (1111)"},
        {3, "(00000000), (00001111), (00110011), (00111100), (01010101), (01011010), (01100110), (01101001)",
         "(10010110), (10011001), (10100101), (10101010), (11000011), (11001100), (11110000), (11111111)"},
    };
    Outcome o;
    auto start = Clock::now();
    std::vector<FunctionFamily> families;
    for (const auto &e : expected) {
        families.push_back(generate_functions(e.n));
    }
    double elapsed = ms_since(start);
    for (std::size_t i = 0; i < families.size(); i++) {
        const auto &e = expected[i];
        std::string pos = listing(families[i].positives);
        std::string neg = listing(families[i].negatives);
        o.expect(pos == e.positives, "n=" + std::to_string(e.n) + " positives: got " + pos + ", want " + e.positives);
        o.expect(neg == e.negatives, "n=" + std::to_string(e.n) + " negatives: got " + neg + ", want " + e.negatives);
    }
    o.expect(elapsed < 1.0, "generation took " + std::to_string(elapsed) + " ms");
    return o;
}

Outcome count_law() {
    Outcome o;
    for (int n = 1; n <= 8; n++) {
        std::vector<TruthTable> gen = admissible(n);
        std::set<std::string> generated;
        for (const auto &t : gen) {
            generated.insert(t.to_binary());
        }
        o.expect(gen.size() == (std::size_t{1} << (n + 1)) && generated.size() == gen.size(),
                 "n=" + std::to_string(n) + ": " + std::to_string(gen.size()) + " functions");
        std::set<std::string> affine;
        for (const auto &t : ref::all_affine_tables(n)) {
            affine.insert(ref::to_binary(t));
        }
        o.expect(generated == affine, "n=" + std::to_string(n) + ": generated set differs from affine set");

        if (n <= 4) {
            std::size_t size = std::size_t{1} << n;
            std::set<std::string> brute;
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << size); code++) {
                std::vector<std::uint8_t> bits(size);
                for (std::size_t i = 0; i < size; i++) {
                    bits[i] = static_cast<std::uint8_t>((code >> (size - 1 - i)) & 1);
                }
                TruthTable t(n, bits);
                if (is_admissible(t)) {
                    brute.insert(t.to_binary());
                }
            }
            o.expect(brute == affine, "n=" + std::to_string(n) + ": brute-force admissible set differs");
        }
    }
    return o;
}

Outcome basis_outputs_n2() {
    // Columns of the n=2 table on input +|0,0,1>, amplitudes 0..7.
    const std::vector<std::pair<std::string, std::vector<int>>> columns = {
        {"0000", {0, 1, 0, 0, 0, 0, 0, 0}},  {"0011", {0, 0, 0, 0, 0, 1, 0, 0}},
        {"0101", {0, 0, 0, 1, 0, 0, 0, 0}},  {"0110", {0, 0, 0, 0, 0, 0, 0, 1}},
        {"1001", {0, 0, 0, 0, 0, 0, 0, -1}}, {"1010", {0, 0, 0, -1, 0, 0, 0, 0}},
        {"1100", {0, 0, 0, 0, 0, -1, 0, 0}}, {"1111", {0, -1, 0, 0, 0, 0, 0, 0}},
    };
    Outcome o;
    for (const auto &[f, want] : columns) {
        StateVector got = pipeline_state(tt(f), BasisKet::parse("+001"));
        o.expect(same(got.amplitudes(), scaled(want, 1.0), 0.0), "f=" + f + " gave " + format_vector(got));
    }
    return o;
}

Outcome worked_vectors() {
    Outcome o;
    const double r8 = std::sqrt(8.0);
    StateVector h = hadamard_all(ket_to_vector(BasisKet::parse("+001")));
    o.expect(same(h.amplitudes(), scaled({1, -1, 1, -1, 1, -1, 1, -1}, r8), 1e-12),
             "H|001> = " + format_vector(h));

    const std::vector<std::pair<std::string, std::vector<int>>> after_oracle = {
        {"0000", {1, -1, 1, -1, 1, -1, 1, -1}},
        {"0011", {1, -1, 1, -1, -1, 1, -1, 1}},
        {"0101", {1, -1, -1, 1, 1, -1, -1, 1}},
        {"0110", {1, -1, -1, 1, -1, 1, 1, -1}},
    };
    for (const auto &[f, want] : after_oracle) {
        StateVector got = QuantumOracle(tt(f)).apply(h);
        o.expect(same(got.amplitudes(), scaled(want, r8), 0.0), "U_f for f=" + f + " gave " + format_vector(got));
    }

    StateVector product(scaled({1, -1, -1, 1, -1, 1, 1, -1}, r8));
    const double s = 1.0 / std::sqrt(2.0);
    try {
        auto factors = factor_product_state(product);
        o.expect(factors.size() == 3, "expected three factors");
        for (const auto &f : factors) {
            o.expect(std::abs(f[0] - s) <= 1e-12 && std::abs(f[1] + s) <= 1e-12, "factor is not (1 -1)/sqrt(2)");
        }
    } catch (const Error &e) {
        o.fail(std::string("factoring threw ") + e.name());
    }
    return o;
}

Outcome simulation_vs_prediction() {
    Outcome o;
    auto start = Clock::now();
    for (int n = 1; n <= 6; n++) {
        VerifyReport r = verify_all(n);
        std::size_t want = (std::size_t{1} << (n + 1)) * (std::size_t{1} << (n + 1));
        o.expect(r.ok() && r.total == want, "n=" + std::to_string(n) + ": " + r.to_text());
    }
    double elapsed = ms_since(start);
    o.expect(elapsed < 10000.0, "took " + std::to_string(elapsed) + " ms");
    return o;
}

Outcome problems_a_and_b() {
    Outcome o;
    auto cli = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = cli::dispatch(args, out, err);
        return std::make_pair(code, out.str());
    };
    auto a = cli({"solve", "+10001", "+11101"});
    o.expect(a.first == 0 && "$" + a.second == "$3C3C\n", "solve printed '" + a.second + "'");
    o.expect(build_catalog(4).by_id("g").table == parse_function("$3C3C"), "$3C3C is not catalog entry g");

    auto b = cli({"simulate", "$3333", "+00001"});
    o.expect(b.first == 0 && b.second == "+00101\n", "simulate printed '" + b.second + "'");
    o.expect(build_catalog(4).by_id("e").table == parse_function("$3333"), "$3333 is not catalog entry e");
    return o;
}

Outcome catalog_and_chart() {
    const char *catalog_rows[][3] = {
        {"a", "0000", "0"},     {"b", "00FF", "255"},   {"c", "0F0F", "3855"},  {"d", "0FF0", "4080"},
        {"e", "3333", "13107"}, {"f", "33CC", "13260"}, {"g", "3C3C", "15420"}, {"h", "3CC3", "15555"},
        {"i", "5555", "21845"}, {"j", "55AA", "21930"}, {"k", "5A5A", "23130"}, {"l", "5AA5", "23205"},
        {"m", "6666", "26214"}, {"n", "6699", "26265"}, {"o", "6969", "26985"}, {"p", "6996", "27030"},
    };
    const char *chart_rows =
        "00001 a . e . c . g . b . f .\n"
        "00011 i a . e . c . g . b . f\n"
        "00101 e . a . g . c . f . b .\n"
        "00111 m e . a . g . c . f . b\n"
        "01001 c . g . a . e . d . h .\n"
        "01011 k c . g . a . e . d . h\n"
        "01101 g . c . e . a . h . d .\n"
        "01111 o g . c . e . a . h . d\n"
        "10001 b . f . d . h . a . e .\n"
        "10011 j b . f . d . h . a . e\n"
        "10101 f . b . h . d . e . a .\n"
        "10111 n f . b . h . d . e . a\n"
        "11001 d . h . b . f . c . g .\n"
        "11011 l d . h . b . f . c . g\n"
        "11101 h . d . f . b . g . c .\n"
        "11111 p h . d . f . b . g . c\n";

    Outcome o;
    FunctionCatalog catalog = build_catalog(4);
    o.expect(catalog.entries.size() == 16, "catalog has " + std::to_string(catalog.entries.size()) + " rows");
    for (std::size_t i = 0; i < 16 && i < catalog.entries.size(); i++) {
        const auto &e = catalog.entries[i];
        o.expect(e.id == catalog_rows[i][0] && hex_encode(e.table) == catalog_rows[i][1] && e.table.to_decimal() == catalog_rows[i][2],
                 "row " + e.id + " is " + hex_encode(e.table) + " " + e.table.to_decimal());
    }

    MappingChart chart = build_chart(4);
    std::istringstream in(chart_rows);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string label, token;
        fields >> label;
        std::size_t y = std::stoul(label, nullptr, 2) >> 1;
        for (std::size_t x = 0; fields >> token; x++) {
            if (token != ".") {
                o.expect(chart.id_at(y, x) == token, "cell (" + label + ", " + chart.state_label(x) + ") is " +
                                                         chart.id_at(y, x) + ", want " + token);
            }
        }
    }
    o.expect(chart.side() == 16 && is_latin_square(chart), "chart is not a 16x16 Latin square");
    return o;
}

Outcome negative_functions() {
    Outcome o;
    StateVector v = pipeline_state(tt("1111"), BasisKet::parse("+001"));
    o.expect(same(v.amplitudes(), {0, -1, 0, 0, 0, 0, 0, 0}, 0.0), "f=1111 gave " + format_vector(v));
    for (int n = 1; n <= 4; n++) {
        for (const auto &f : admissible(n)) {
            for (const auto &input : signed_inputs(n)) {
                BasisKet pos = run(f, input).output;
                BasisKet neg = run(f.complement(), input).output;
                o.expect(neg.bits == pos.bits && neg.sign == -pos.sign,
                         "duality fails for f=" + f.to_binary() + " on " + input.str());
            }
        }
    }
    return o;
}

Outcome circuit_equivalence() {
    Outcome o;
    auto start = Clock::now();
    int total = 0, all_inputs = 0, ancilla_one = 0;
    std::string first_bad;
    for (int n = 1; n <= 4; n++) {
        for (const auto &f : admissible(n)) {
            Circuit full = pipeline_circuit(f);
            Circuit equivalent = compile_equivalent(f);
            total++;
            if (assert_equivalent(full, equivalent, InputDomain::AllBasisStates, 1e-9)) {
                all_inputs++;
            } else if (first_bad.empty()) {
                first_bad = f.to_binary();
            }
            if (assert_equivalent(full, equivalent, InputDomain::AncillaOne, 1e-9)) {
                ancilla_one++;
            }
        }
    }
    double elapsed = ms_since(start);
    o.expect(all_inputs == total, "equivalent on all basis inputs for " + std::to_string(all_inputs) + "/" +
                                      std::to_string(total) + " functions (first failure f=" + first_bad +
                                      "); on inputs |x,1> only: " + std::to_string(ancilla_one) + "/" +
                                      std::to_string(total));
    o.expect(elapsed < 5000.0, "took " + std::to_string(elapsed) + " ms");
    return o;
}

Outcome rejection() {
    Outcome o;
    std::set<std::string> affine;
    for (const auto &t : ref::all_affine_tables(2)) {
        affine.insert(ref::to_binary(t));
    }
    int rejected_tables = 0;
    auto expect_rejected = [&](const TruthTable &f) {
        bool all = true;
        for (const auto &input : signed_inputs(f.num_vars())) {
            try {
                run(f, input);
                all = false;
                o.fail("f=" + f.to_binary() + " on " + input.str() + " gave a basis state");
            } catch (const NotBasisState &) {
            }
        }
        rejected_tables += all;
    };
    int candidates = 0;
    for (int code = 0; code < 16; code++) {
        TruthTable f(2, {static_cast<std::uint8_t>(code >> 3 & 1), static_cast<std::uint8_t>(code >> 2 & 1),
                         static_cast<std::uint8_t>(code >> 1 & 1), static_cast<std::uint8_t>(code & 1)});
        if (!affine.contains(f.to_binary())) {
            candidates++;
            expect_rejected(f);
        }
    }
    o.expect(candidates == 8, std::to_string(candidates) + " non-admissible n=2 tables");
    expect_rejected(tt("00010111"));
    o.expect(rejected_tables == 9, std::to_string(rejected_tables) + "/9 tables rejected");
    return o;
}

Outcome simon_invariance() {
    Outcome o;
    for (int n = 1; n <= 4; n++) {
        for (const auto &f : admissible(n)) {
            BitVec mask = to_parity_form(f).mask;
            for (std::uint64_t d = 0; d < (std::uint64_t{1} << n); d++) {
                BitVec delta(n, d);
                bool want = (delta & mask).parity() == 0;
                o.expect(is_invariant_under(f, delta) == want,
                         "f=" + f.to_binary() + " delta=" + delta.str() + " disagrees with the parity rule");
            }
        }
    }
    o.expect(is_invariant_under(tt("0011"), BitVec::parse("01")), "0011 not invariant under 01");
    o.expect(is_invariant_under(tt("0101"), BitVec::parse("10")), "0101 not invariant under 10");
    o.expect(is_invariant_under(tt("0110"), BitVec::parse("11")), "0110 not invariant under 11");
    return o;
}

// Dense-matrix derivation of the success probability with a rotation on one
// qubit right after the first Hadamard layer.
double reference_rotation_probability(const std::string &f, const std::string &input, int qubit, double angle,
                                      std::size_t target) {
    std::vector<int> table = ref::from_binary(f);
    int qubits = static_cast<int>(input.size());
    ref::Matrix h = ref::hadamard_layer(qubits);
    ref::Vector v = ref::basis(qubits, std::stoul(input, nullptr, 2));
    v = ref::mul(h, v);
    v = ref::mul(ref::single_qubit(qubits, qubit, ref::rotation2(angle)), v);
    v = ref::mul(h, ref::mul(ref::oracle(table), v));
    return v[target] * v[target];
}

Outcome fault_detection() {
    Outcome o;
    for (int n = 1; n <= 3; n++) {
        for (const auto &f : admissible(n)) {
            for (const auto &input : signed_inputs(n)) {
                double p = success_probability(f, input, std::nullopt);
                o.expect(p == 1.0, "faultless p=" + std::to_string(p) + " for f=" + f.to_binary());
            }
        }
    }
    TruthTable f = tt("0011");
    BasisKet input = BasisKet::parse("+001");
    double skip = success_probability(f, input, SkipHadamard{Layer::Second, 0});
    o.expect(std::abs(skip - 0.5) <= 1e-12, "skip gave " + std::to_string(skip));

    // Output of the exact pipeline for 0011 on |001> is |101>, index 5.
    for (double eps : {0.1, 0.5}) {
        double analytic = std::cos(eps) * std::cos(eps);
        double dense = reference_rotation_probability("0011", "001", 1, eps, 5);
        double got = success_probability(f, input, RotateQubit{Layer::First, 1, eps});
        o.expect(std::abs(dense - analytic) <= 1e-9, "reference derivation disagrees with cos^2");
        o.expect(std::abs(got - analytic) <= 1e-9,
                 "rotate eps=" + std::to_string(eps) + " gave " + std::to_string(got));
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "generated listings for n=1..3 match verbatim", generation_listings},
        {2, "count law 2^(n+1) and affine set equality, n=1..8", count_law},
        {3, "n=2 output vectors on +|0,0,1>", basis_outputs_n2},
        {4, "worked vectors and product-state factoring", worked_vectors},
        {5, "simulation equals prediction, n<=6", simulation_vs_prediction},
        {6, "problems A and B through the CLI", problems_a_and_b},
        {7, "n=4 catalog and mapping chart", catalog_and_chart},
        {8, "negative functions and complement duality", negative_functions},
        {9, "pipeline circuit equals its X-gate equivalent on all basis inputs, n<=4", circuit_equivalence},
        {10, "non-admissible functions are rejected", rejection},
        {11, "invariance under delta follows the mask parity, n<=4", simon_invariance},
        {12, "fault success probabilities", fault_detection},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o.fail(std::string("unexpected exception: ") + e.what());
        }
        double elapsed = ms_since(start);
        std::printf("%s  [%2d] %s (%.1f ms)\n", o.ok ? "PASS" : "FAIL", c.id, c.title, elapsed);
        if (!o.ok) {
            std::printf("          %s\n", o.detail.c_str());
            failed++;
        }
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
