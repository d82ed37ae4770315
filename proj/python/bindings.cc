// Copyright 2026 The kuniform Authors
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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kuniform/bounds.h"
#include "kuniform/catalog.h"
#include "kuniform/constructions.h"
#include "kuniform/error.h"
#include "kuniform/graph.h"
#include "kuniform/hadamard.h"
#include "kuniform/ket.h"
#include "kuniform/orthogonal_array.h"
#include "kuniform/phases.h"
#include "kuniform/pure_state.h"
#include "kuniform/reduction.h"
#include "kuniform/report_json.h"
#include "kuniform/uniformity.h"

namespace py = pybind11;
using namespace kuniform;

namespace {

py::array_t<std::complex<double>> density_to_numpy(const DensityMatrix &rho) {
    py::array_t<std::complex<double>> out({rho.dim(), rho.dim()});
    auto view = out.mutable_unchecked<2>();
    for (size_t i = 0; i < rho.dim(); i++) {
        for (size_t j = 0; j < rho.dim(); j++) {
            view(i, j) = rho.at(i, j);
        }
    }
    return out;
}

py::array_t<int8_t> hadamard_to_numpy(const HadamardMatrix &h) {
    py::array_t<int8_t> out({h.order(), h.order()});
    auto view = out.mutable_unchecked<2>();
    for (size_t i = 0; i < h.order(); i++) {
        for (size_t j = 0; j < h.order(); j++) {
            view(i, j) = (int8_t)h.at(i, j);
        }
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_kuniform, m) {
    m.doc() = "Orthogonal arrays and k-uniform states";

    static py::exception<Error> error(m, "Error");
    static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const ParseError &e) {
            PyErr_SetObject(parse_error.ptr(), py::make_tuple(e.what(), e.line(), e.column()).ptr());
        } catch (const Error &e) {
            PyErr_SetObject(error.ptr(), py::make_tuple(e.what(), std::string(error_code_name(e.code()))).ptr());
        }
    });

    py::class_<OrthogonalArray>(m, "OrthogonalArray")
        .def_static("from_rows", &OrthogonalArray::from_rows, py::arg("rows"), py::arg("levels"),
                    py::arg("strength") = std::nullopt)
        .def_property_readonly("runs", &OrthogonalArray::runs)
        .def_property_readonly("factors", &OrthogonalArray::factors)
        .def_property_readonly("levels", &OrthogonalArray::levels)
        .def_property_readonly("declared_strength", &OrthogonalArray::declared_strength)
        .def("rows", &OrthogonalArray::rows)
        .def("__eq__", &OrthogonalArray::operator==)
        .def("__repr__", [](const OrthogonalArray &a) {
            return "OrthogonalArray(runs=" + std::to_string(a.runs()) + ", factors=" + std::to_string(a.factors()) +
                   ", levels=" + std::to_string(a.levels()) + ")";
        });

    m.def("verify_strength", &verify_strength, py::arg("oa"), py::arg("k"));
    m.def("max_strength", &max_strength, py::arg("oa"));
    m.def("oa_index", &oa_index, py::arg("oa"), py::arg("k"));
    m.def(
        "is_irredundant", [](const OrthogonalArray &a, size_t k) { return is_irredundant(a, k).irredundant; },
        py::arg("oa"), py::arg("k"));
    m.def("is_tight", &is_tight, py::arg("oa"));
    m.def(
        "remove_columns",
        [](const OrthogonalArray &a, std::vector<size_t> cols) { return remove_columns(a, cols); },
        py::arg("oa"), py::arg("columns"));
    m.def("parse_oa_file", &parse_oa_file, py::arg("text"));
    m.def("write_oa_file", &write_oa_file, py::arg("oa"));
    m.def(
        "oa_summary_json", [](const OrthogonalArray &a) { return oa_summary_json(summarize_oa(a), std::nullopt, std::nullopt); },
        py::arg("oa"));

    py::class_<HadamardMatrix>(m, "HadamardMatrix")
        .def_property_readonly("order", &HadamardMatrix::order)
        .def("to_numpy", &hadamard_to_numpy)
        .def("is_normalized", &HadamardMatrix::is_normalized);
    m.def("sylvester", &sylvester, py::arg("m"));
    m.def("paley_type1", &paley_type1, py::arg("q"));
    m.def("kron", &kron);
    m.def("normalize", &normalize);
    m.def("hadamard_of_order", &hadamard_of_order, py::arg("order"));
    m.def("hadamard_to_oa", &hadamard_to_oa);

    m.def("rao_oa", &rao_oa, py::arg("d"), py::arg("n"));
    m.def("bush_oa", &bush_oa, py::arg("d"), py::arg("k"));
    m.def("bush_extended_oa", &bush_extended_oa, py::arg("d"));
    m.def("choose_hadamard_order", &choose_hadamard_order, py::arg("n"));
    m.def("hadamard_two_uniform_oa", &hadamard_two_uniform_oa, py::arg("n"));
    m.def("hadamard_two_uniform_state", &hadamard_two_uniform_state, py::arg("n"));

    py::class_<PureState>(m, "PureState")
        .def_property_readonly("qudits", &PureState::qudits)
        .def_property_readonly("levels", &PureState::levels)
        .def("__len__", &PureState::size)
        .def("terms",
             [](const PureState &s) {
                 py::list out;
                 for (const auto &t : s.terms()) {
                     out.append(py::make_tuple(t.word, t.phase));
                 }
                 return out;
             })
        .def("__str__", &write_ket);
    m.def("parse_ket", &parse_ket, py::arg("text"), py::arg("levels") = std::nullopt);
    m.def("write_ket", &write_ket, py::arg("state"));
    m.def(
        "state_from_oa",
        [](const OrthogonalArray &a, std::optional<std::vector<Phase>> phases) {
            if (!phases) {
                return state_from_oa(a);
            }
            return state_from_oa(a, std::span<const Phase>(*phases));
        },
        py::arg("oa"), py::arg("phases") = std::nullopt);
    m.def(
        "orbit_state", [](const PureState &s, std::vector<double> angles) { return orbit_state(s, angles); },
        py::arg("state"), py::arg("angles"));

    m.def(
        "reduce", [](const PureState &s, ColumnSet keep) { return density_to_numpy(reduce(s, keep)); },
        py::arg("state"), py::arg("keep"));
    m.def("is_k_uniform", &is_k_uniform, py::arg("state"), py::arg("k"), py::arg("tol") = 1e-9);
    m.def("max_uniformity", &max_uniformity, py::arg("state"), py::arg("tol") = 1e-9);
    m.def(
        "uniformity_json",
        [](const PureState &s, size_t k, double tol) { return uniformity_report_json(uniformity(s, k, tol)); },
        py::arg("state"), py::arg("k"), py::arg("tol") = 1e-9);

    py::enum_<FixStatus>(m, "FixStatus")
        .value("SOLVED", FixStatus::kSolved)
        .value("INFEASIBLE", FixStatus::kInfeasible)
        .value("UNSUPPORTED", FixStatus::kUnsupported);
    py::class_<FixResult>(m, "FixResult")
        .def_readonly("status", &FixResult::status)
        .def_readonly("state", &FixResult::state)
        .def_readonly("signs", &FixResult::signs)
        .def_readonly("exhaustive", &FixResult::exhaustive)
        .def_readonly("detail", &FixResult::detail);
    m.def("fix_state", &fix_state, py::arg("oa"), py::arg("k"));

    m.def(
        "graph_dot", [](const PureState &s, ColumnSet keep) { return to_dot(graph_from_state(s, keep)); },
        py::arg("state"), py::arg("keep"));
    m.def(
        "graph_json", [](const PureState &s, ColumnSet keep) { return to_json(graph_from_state(s, keep)); },
        py::arg("state"), py::arg("keep"));
    m.def("is_k_uniform_by_graphs", &is_k_uniform_by_graphs, py::arg("state"), py::arg("k"));

    m.def("rao_min_runs", &rao_min_runs, py::arg("n"), py::arg("d"), py::arg("k"));
    m.def("gv_holds", &gv_holds, py::arg("n"), py::arg("k"));
    m.def("singleton_max_k", &singleton_max_k, py::arg("n"));
}
