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

#include "qtestfn/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <functional>

#include "qtestfn/boolfunc.hpp"
#include "qtestfn/charts.hpp"
#include "qtestfn/circuits.hpp"
#include "qtestfn/errors.hpp"
#include "qtestfn/oracle.hpp"
#include "qtestfn/pipeline.hpp"
#include "qtestfn/statevec.hpp"

namespace qtestfn::cli {

namespace {

struct Options {
    double tolerance = kDefaultTolerance;
    int max_qubits = kMaxStateQubits;
};

void check_width(const Options &opts, int qubits) {
    if (qubits > opts.max_qubits) {
        throw BoundsError(std::to_string(qubits) + " qubits exceeds --max-qubits " + std::to_string(opts.max_qubits));
    }
}

TruthTable function_arg(const Options &opts, const std::string &text) {
    TruthTable f = parse_function(text);
    check_width(opts, f.num_vars() + 1);
    return f;
}

BasisKet state_arg(const Options &opts, const std::string &text) {
    BasisKet ket = BasisKet::parse(text);
    check_width(opts, ket.qubits());
    return ket;
}

std::string format_probability(double p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", p);
    return buf;
}

}  // namespace

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Symmetric/antisymmetric test functions for Hadamard-oracle-Hadamard circuits", "qtestfn"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--tolerance", opts.tolerance, "Basis-state detection tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-qubits", opts.max_qubits, "Largest state width accepted (n+1)")
        ->check(CLI::Range(1, kMaxStateQubits));

    std::function<int()> action;
    int n = 0;
    std::string fn;
    std::string state;
    std::string state2;
    std::string text;
    std::string format = "text";
    bool negative = false;
    bool show_vector = false;

    auto *gen = app.add_subcommand("gen", "List the positive then negative test functions on n variables");
    gen->add_option("n", n, "Variable count")->required();
    gen->callback([&] {
        action = [&] {
            FunctionFamily family = generate_functions(n);
            for (const auto *list : {&family.positives, &family.negatives}) {
                for (const auto &f : *list) {
                    out << f.to_binary() << ' ' << hex_encode(f) << ' ' << f.to_decimal() << ' '
                        << to_string(classify(f)) << '\n';
                }
            }
            return kExitOk;
        };
    });

    auto *cls = app.add_subcommand("classify", "Print Positive, Negative or NotAdmissible");
    cls->add_option("fn", fn, "Truth table (binary, $hex or 0xhex)")->required();
    cls->callback([&] {
        action = [&] {
            FunctionClass c = classify(parse_function(fn));
            out << to_string(c) << '\n';
            return c == FunctionClass::NotAdmissible ? kExitDomainError : kExitOk;
        };
    });

    auto *par = app.add_subcommand("parity", "Print the mask/complement form of a test function");
    par->add_option("fn", fn)->required();
    par->callback([&] {
        action = [&] {
            ParityForm form = to_parity_form(parse_function(fn));
            out << "mask=" << form.mask.str() << " complement=" << form.complement << " f=" << form.expression()
                << '\n';
            return kExitOk;
        };
    });

    auto *sim = app.add_subcommand("simulate", "Run H, U_f, H on a signed input state such as +001");
    sim->add_option("fn", fn)->required();
    sim->add_option("state", state, "Signed input bits including the ancilla 1")->required();
    sim->add_flag("--vector", show_vector, "Print the full output vector instead of the ket");
    sim->callback([&] {
        action = [&] {
            TruthTable f = function_arg(opts, fn);
            BasisKet input = state_arg(opts, state);
            if (show_vector) {
                out << format_vector(pipeline_state(f, input), opts.tolerance) << '\n';
                return kExitOk;
            }
            out << run(f, input, opts.tolerance).output.str() << '\n';
            return kExitOk;
        };
    });

    auto *pre = app.add_subcommand("predict", "Predict the pipeline output without simulating");
    pre->add_option("fn", fn)->required();
    pre->add_option("state", state)->required();
    pre->callback([&] {
        action = [&] {
            out << predict(function_arg(opts, fn), state_arg(opts, state)).output.str() << '\n';
            return kExitOk;
        };
    });

    auto *sol = app.add_subcommand("solve", "Find the test function mapping one state to another");
    sol->add_option("input", state)->required();
    sol->add_option("output", state2)->required();
    sol->callback([&] {
        action = [&] {
            out << hex_encode(solve_function(state_arg(opts, state), state_arg(opts, state2))) << '\n';
            return kExitOk;
        };
    });

    auto *chart = app.add_subcommand("chart", "Output-vs-input mapping chart of the positive functions");
    chart->add_option("n", n)->required();
    chart->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
    chart->add_flag("--negative", negative, "Label cells with the negative (complemented) functions");
    chart->callback([&] {
        action = [&] {
            out << render(build_chart(n), parse_format(format), negative);
            return kExitOk;
        };
    });

    auto *cat = app.add_subcommand("catalog", "Labelled list of the positive functions");
    cat->add_option("n", n)->required();
    cat->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
    cat->callback([&] {
        action = [&] {
            out << render(build_catalog(n), parse_format(format));
            return kExitOk;
        };
    });

    auto *eq = app.add_subcommand("equiv", "Check the CNOT pipeline circuit against its X-gate equivalent");
    eq->add_option("fn", fn)->required();
    eq->callback([&] {
        action = [&] {
            TruthTable f = function_arg(opts, fn);
            Circuit full = pipeline_circuit(f);
            Circuit equivalent = compile_equivalent(f);
            out << full.to_text() << "--\n" << equivalent.to_text();
            bool same = assert_equivalent(full, equivalent, InputDomain::AncillaOne, opts.tolerance);
            out << (same ? "EQUIVALENT" : "NOT EQUIVALENT") << " on all inputs |x,1>\n";
            return same ? kExitOk : kExitDomainError;
        };
    });

    auto *ver = app.add_subcommand("verify", "Compare simulation with prediction for every function and input");
    ver->add_option("n", n)->required();
    ver->callback([&] {
        action = [&] {
            VerifyReport report = verify_all(n);
            out << report.to_text();
            return report.ok() ? kExitOk : kExitDomainError;
        };
    });

    auto *flt = app.add_subcommand("fault", "Success probability with one injected fault");
    flt->add_option("fn", fn)->required();
    flt->add_option("state", state)->required();
    flt->add_option("spec", text, "none | skip:<first|second>:<q> | rotate:<first|second>:<q>:<rad> | corrupt:<i>")
        ->required();
    flt->callback([&] {
        action = [&] {
            double p = success_probability(function_arg(opts, fn), state_arg(opts, state), parse_fault(text));
            out << format_probability(p) << '\n';
            return kExitOk;
        };
    });

    auto *fac = app.add_subcommand("factor", "Split a product state into single-qubit factors");
    fac->add_option("vector", text, "e.g. \"(1 -1 -1 1 -1 1 1 -1)/sqrt(8)\"")->required();
    fac->callback([&] {
        action = [&] {
            StateVector v = parse_vector(text);
            check_width(opts, v.qubits());
            auto factors = factor_product_state(v, opts.tolerance);
            for (std::size_t q = 0; q < factors.size(); q++) {
                out << "q" << q << ": "
                    << format_vector(StateVector({factors[q][0], factors[q][1]}), opts.tolerance) << '\n';
            }
            return kExitOk;
        };
    });

    auto *mat = app.add_subcommand("matrix", "Print the U_f permutation matrix");
    mat->add_option("fn", fn)->required();
    mat->callback([&] {
        action = [&] {
            out << QuantumOracle(function_arg(opts, fn)).matrix().to_text();
            return kExitOk;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action();
    } catch (const Error &e) {
        err << "error: " << e.name() << ": " << e.what() << '\n';
        return kExitDomainError;
    }
}

}  // namespace qtestfn::cli
