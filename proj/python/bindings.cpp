// Copyright 2026 The stabrank Authors
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
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "stabrank/count.hpp"
#include "stabrank/oracle.hpp"
#include "stabrank/simulate.hpp"

namespace py = pybind11;
using namespace stabrank;

namespace {

BitMatrix matrix_from_rows(const std::vector<std::string> &rows) {
    return BitMatrix::from_rows(rows);
}

Z4Matrix z4_from_entries(const std::vector<std::vector<int>> &entries) {
    return Z4Matrix::from_entries(entries);
}

py::int_ signed_pow2_value(const SignedPow2 &s) {
    if (s.sign == 0) {
        return py::int_(0);
    }
    py::int_ one(s.sign);
    return py::reinterpret_steal<py::int_>(PyNumber_Lshift(one.ptr(), py::int_(s.exp).ptr()));
}

Graph graph_from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges,
                       const std::vector<std::pair<std::size_t, int>> &loops) {
    Graph g(n);
    for (auto [i, j] : edges) {
        g.toggle_edge(i, j);
    }
    for (auto [i, w] : loops) {
        g.add_loop(i, static_cast<uint8_t>(((w % 4) + 4) % 4));
    }
    return g;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact strong simulation of stabilizer circuits via quadratic forms over Z4";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NonClassicalForm>(m, "NonClassicalForm", PyExc_ValueError);
    py::register_exception<PromiseViolation>(m, "PromiseViolation", PyExc_ValueError);

    py::class_<SignedPow2>(m, "SignedPow2")
        .def_readonly("sign", &SignedPow2::sign)
        .def_readonly("exp", &SignedPow2::exp)
        .def_property_readonly("value", &signed_pow2_value)
        .def("__int__", &signed_pow2_value)
        .def("__str__", &SignedPow2::to_string)
        .def("__eq__", &SignedPow2::operator==);

    py::class_<DyadicAmplitude>(m, "DyadicAmplitude")
        .def_readonly("re", &DyadicAmplitude::re)
        .def_readonly("im", &DyadicAmplitude::im)
        .def_readonly("half_divisor_exp", &DyadicAmplitude::half_divisor_exp)
        .def("is_zero", &DyadicAmplitude::is_zero)
        .def("__complex__", &DyadicAmplitude::to_complex)
        .def("__str__", &DyadicAmplitude::to_string)
        .def("__repr__", [](const DyadicAmplitude &a) { return "DyadicAmplitude(" + a.to_string() + ")"; })
        .def("__eq__", &DyadicAmplitude::operator==);

    py::class_<Probability>(m, "Probability")
        .def_readonly("is_zero", &Probability::is_zero)
        .def_readonly("log2", &Probability::log2)
        .def("__float__", &Probability::to_double)
        .def("__str__", &Probability::to_string)
        .def("__repr__", [](const Probability &p) { return "Probability(" + p.to_string() + ")"; })
        .def("__eq__", &Probability::operator==);

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<std::size_t>(), py::arg("num_qubits"))
        .def_static(
            "from_stab",
            [](const std::string &text) {
                std::istringstream in(text);
                return read_stab(in);
            },
            py::arg("text"))
        .def(
            "append",
            [](Circuit &c, const std::string &name, uint32_t q0, std::optional<uint32_t> q1) {
                std::ostringstream line;
                line << "qubits " << c.num_qubits() << "\n" << name << " " << q0;
                if (q1) {
                    line << " " << *q1;
                }
                std::istringstream in(line.str());
                c.append(read_stab(in).gates().at(0));
            },
            py::arg("gate"), py::arg("q0"), py::arg("q1") = py::none())
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def_property_readonly("num_gates", [](const Circuit &c) { return c.gates().size(); })
        .def("to_stab", [](const Circuit &c) {
            std::ostringstream out;
            write_stab(out, c);
            return out.str();
        });

    m.def(
        "rank", [](const std::vector<std::string> &rows) { return rank(matrix_from_rows(rows)); }, py::arg("rows"),
        "F2 rank of a matrix given as strings of '0'/'1'.");
    m.def(
        "rank_via_simulation",
        [](const std::vector<std::string> &rows) { return rank_via_simulation(matrix_from_rows(rows)); },
        py::arg("rows"), "Rank recovered from the probability of the bipartite graph-state circuit.");
    m.def(
        "reduce",
        [](const std::vector<std::string> &rows) { return graph_to_circuit(rank_to_graph(matrix_from_rows(rows))); },
        py::arg("rows"), "Graph-state circuit whose all-zeros probability is 2^(-2 rank).");

    m.def(
        "count",
        [](const std::vector<std::vector<int>> &entries) {
            Distribution d = count_form(z4_from_entries(entries));
            return py::make_tuple(signed_pow2_value(d.d0), signed_pow2_value(d.d1));
        },
        py::arg("entries"), "(N0 - N2, N1 - N3) of x^T A x for a classical symmetric Z4 matrix A.");
    m.def(
        "count_linear",
        [](const std::vector<int> &coeffs) {
            std::vector<uint8_t> c;
            for (int v : coeffs) {
                c.push_back(static_cast<uint8_t>(((v % 4) + 4) % 4));
            }
            Distribution d = count_linear(c);
            return py::make_tuple(signed_pow2_value(d.d0), signed_pow2_value(d.d1));
        },
        py::arg("coeffs"));
    m.def(
        "normalize",
        [](const std::vector<std::vector<int>> &entries) {
            NormalForm nf = normalize(z4_from_entries(entries));
            py::dict out;
            out["kind"] = nf.kind == FormKind::Alternating ? "alternating" : "non-alternating";
            out["n"] = nf.n;
            out["r"] = nf.r;
            out["w"] = nf.w.to_string();
            out["d_prime_diag"] = std::vector<int>(nf.d_prime_diag.begin(), nf.d_prime_diag.end());
            out["k"] = nf.k;
            out["c"] = nf.c;
            out["d"] = nf.d;
            out["a"] = nf.a;
            out["b"] = nf.b;
            out["eta"] = nf.eta;
            return out;
        },
        py::arg("entries"));
    m.def(
        "path_sum",
        [](const std::vector<std::vector<int>> &entries) {
            CountVector cv = path_sum(z4_from_entries(entries));
            return py::make_tuple(cv.n0, cv.n1, cv.n2, cv.n3);
        },
        py::arg("entries"), "(N0, N1, N2, N3) by enumeration.");

    m.def(
        "amplitude",
        [](const Circuit &c, const std::string &x, const std::string &z) {
            return amplitude(c, BitVector::from_string(x), BitVector::from_string(z));
        },
        py::arg("circuit"), py::arg("inp"), py::arg("out"));
    m.def(
        "probability",
        [](const Circuit &c, const std::string &x, const std::string &z) {
            return probability(c, BitVector::from_string(x), BitVector::from_string(z));
        },
        py::arg("circuit"), py::arg("inp"), py::arg("out"));
    m.def(
        "amplitudes_for_outputs",
        [](const Circuit &c, const std::string &x, const std::vector<std::string> &outs) {
            std::vector<BitVector> zs;
            for (const auto &z : outs) {
                zs.push_back(BitVector::from_string(z));
            }
            return amplitudes_for_outputs(c, BitVector::from_string(x), zs);
        },
        py::arg("circuit"), py::arg("inp"), py::arg("outputs"));
    m.def(
        "statevector_amplitude",
        [](const Circuit &c, const std::string &x, const std::string &z) {
            return statevector_amplitude(c, BitVector::from_string(x), BitVector::from_string(z));
        },
        py::arg("circuit"), py::arg("inp"), py::arg("out"));

    m.def(
        "net_class",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges,
           const std::vector<std::pair<std::size_t, int>> &loops) {
            NetClass nc = coloring_counts(graph_from_edges(n, edges, loops));
            return py::make_tuple(net_sign_name(nc.sign), nc.a_value.num, nc.a_value.den_exp);
        },
        py::arg("n"), py::arg("edges"), py::arg("loops") = std::vector<std::pair<std::size_t, int>>{},
        "(class, numerator, denominator exponent) of a(G) by coloring enumeration.");
    m.def(
        "polymatroid_sum",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
            Dyadic d = polymatroid_sum(graph_from_edges(n, edges, {}));
            return py::make_tuple(d.num, d.den_exp);
        },
        py::arg("n"), py::arg("edges"));
    m.def(
        "enumerate_netzero",
        [](std::size_t max_nodes) {
            py::list out;
            for (const Graph &g : enumerate_netzero(max_nodes)) {
                out.append(py::make_tuple(g.num_nodes(), g.edges()));
            }
            return out;
        },
        py::arg("max_nodes"));
}
