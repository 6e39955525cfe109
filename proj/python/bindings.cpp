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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>

#include "qtestfn/boolfunc.hpp"
#include "qtestfn/charts.hpp"
#include "qtestfn/circuits.hpp"
#include "qtestfn/cli.hpp"
#include "qtestfn/errors.hpp"
#include "qtestfn/oracle.hpp"
#include "qtestfn/pipeline.hpp"
#include "qtestfn/statevec.hpp"

namespace py = pybind11;
using namespace qtestfn;

namespace {

std::vector<double> amplitudes(const StateVector &v) {
    return {v.amplitudes().begin(), v.amplitudes().end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Symmetric/antisymmetric test functions for Hadamard-oracle-Hadamard circuits";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<BoundsError>(m, "BoundsError", base);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<LengthMismatch>(m, "LengthMismatch", base);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
    py::register_exception<NotAdmissible>(m, "NotAdmissible", base);
    py::register_exception<NotBasisState>(m, "NotBasisState", base);
    py::register_exception<Entangled>(m, "Entangled", base);
    py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", base);
    py::register_exception<InvalidFault>(m, "InvalidFault", base);

    py::class_<TruthTable>(m, "TruthTable")
        .def(py::init([](std::string_view text) { return parse_function(text); }), py::arg("text"),
             "Binary (0110), $hex or 0xhex truth table")
        .def_static("from_binary", &TruthTable::from_binary)
        .def_property_readonly("num_vars", &TruthTable::num_vars)
        .def("__len__", &TruthTable::size)
        .def("__getitem__",
             [](const TruthTable &t, std::size_t i) {
                 if (i >= t.size()) {
                     throw py::index_error();
                 }
                 return static_cast<int>(t[i]);
             })
        .def("complement", &TruthTable::complement)
        .def("reversed", &TruthTable::reversed)
        .def("to_binary", &TruthTable::to_binary)
        .def("to_hex", [](const TruthTable &t) { return hex_encode(t); })
        .def("to_decimal", &TruthTable::to_decimal)
        .def("__eq__", [](const TruthTable &a, const TruthTable &b) { return a == b; })
        .def("__lt__", [](const TruthTable &a, const TruthTable &b) { return a < b; })
        .def("__hash__", [](const TruthTable &t) { return py::hash(py::str(t.to_binary())); })
        .def("__str__", &TruthTable::to_binary)
        .def("__repr__", [](const TruthTable &t) { return "TruthTable('" + t.to_binary() + "')"; });

    py::class_<ParityForm>(m, "ParityForm")
        .def_property_readonly("mask", [](const ParityForm &p) { return p.mask.str(); })
        .def_readonly("complement", &ParityForm::complement)
        .def("expression", &ParityForm::expression)
        .def("__repr__", [](const ParityForm &p) {
            return "ParityForm(mask='" + p.mask.str() + "', complement=" + (p.complement ? "True" : "False") + ")";
        });

    m.def(
        "generate_functions",
        [](int n) {
            FunctionFamily fam = generate_functions(n);
            return py::make_tuple(fam.positives, fam.negatives);
        },
        py::arg("n"), "(positives, negatives) for n variables");
    m.def("is_admissible", &is_admissible);
    m.def("classify", [](const TruthTable &t) { return std::string(to_string(classify(t))); });
    m.def("to_parity_form", &to_parity_form);
    m.def("is_invariant_under",
          [](const TruthTable &t, std::string_view delta) { return is_invariant_under(t, BitVec::parse(delta)); });

    m.def(
        "run",
        [](const TruthTable &f, std::string_view state, double tolerance) {
            return run(f, BasisKet::parse(state), tolerance).output.str();
        },
        py::arg("f"), py::arg("state"), py::arg("tolerance") = kDefaultTolerance,
        "Signed output ket such as '+101'; raises NotBasisState for non-admissible f");
    m.def("predict",
          [](const TruthTable &f, std::string_view state) { return predict(f, BasisKet::parse(state)).output.str(); });
    m.def("pipeline_state", [](const TruthTable &f, std::string_view state) {
        return amplitudes(pipeline_state(f, BasisKet::parse(state)));
    });
    m.def("solve_function", [](std::string_view input, std::string_view output) {
        return solve_function(BasisKet::parse(input), BasisKet::parse(output));
    });
    m.def(
        "verify_all",
        [](int n) {
            VerifyReport r = verify_all(n);
            return py::make_tuple(r.passed, r.total, r.failures);
        },
        "(passed, total, failure lines)");
    m.def(
        "success_probability",
        [](const TruthTable &f, std::string_view state, std::string_view fault) {
            return success_probability(f, BasisKet::parse(state), parse_fault(fault));
        },
        py::arg("f"), py::arg("state"), py::arg("fault") = "none");

    m.def("hadamard_all", [](const std::vector<double> &v) { return amplitudes(hadamard_all(StateVector(v))); });
    m.def("oracle_apply", [](const TruthTable &f, const std::vector<double> &v) {
        return amplitudes(QuantumOracle(f).apply(StateVector(v)));
    });
    m.def("oracle_matrix", [](const TruthTable &f) {
        BinaryMatrix mat = QuantumOracle(f).matrix();
        std::vector<std::vector<int>> rows(mat.dim, std::vector<int>(mat.dim));
        for (std::size_t r = 0; r < mat.dim; r++) {
            for (std::size_t c = 0; c < mat.dim; c++) {
                rows[r][c] = mat.at(r, c);
            }
        }
        return rows;
    });
    m.def("factor_product_state", [](const std::vector<double> &v, double tolerance) {
        auto factors = factor_product_state(StateVector(v), tolerance);
        return std::vector<std::array<double, 2>>(factors.begin(), factors.end());
    }, py::arg("vector"), py::arg("tolerance") = kDefaultTolerance);
    m.def("format_vector", [](const std::vector<double> &v) { return format_vector(StateVector(v)); });

    m.def("pipeline_circuit", [](const TruthTable &f) { return pipeline_circuit(f).to_text(); });
    m.def("compile_equivalent", [](const TruthTable &f) { return compile_equivalent(f).to_text(); });
    m.def(
        "assert_equivalent",
        [](std::string_view a, std::string_view b, bool ancilla_one) {
            return assert_equivalent(Circuit::parse(a), Circuit::parse(b),
                                     ancilla_one ? InputDomain::AncillaOne : InputDomain::AllBasisStates);
        },
        py::arg("a"), py::arg("b"), py::arg("ancilla_one") = false,
        "Compares two circuits given as text; ancilla_one restricts inputs to |x,1>");

    m.def(
        "render_catalog", [](int n, std::string_view format) { return render(build_catalog(n), parse_format(format)); },
        py::arg("n"), py::arg("format") = "text");
    m.def(
        "render_chart",
        [](int n, std::string_view format, bool negative) {
            return render(build_chart(n), parse_format(format), negative);
        },
        py::arg("n"), py::arg("format") = "text", py::arg("negative") = false);
    m.def("chart_ids", [](int n) {
        MappingChart chart = build_chart(n);
        std::vector<std::vector<std::string>> rows(chart.side());
        for (std::size_t y = 0; y < chart.side(); y++) {
            for (std::size_t x = 0; x < chart.side(); x++) {
                rows[y].push_back(chart.id_at(y, x));
            }
        }
        return rows;
    });

    m.def(
        "cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int code = cli::dispatch(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "Runs one command line; returns (exit code, stdout, stderr)");
}
