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

#include "stabrank/circuit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace stabrank {

namespace {

constexpr std::array<std::string_view, 9> kGateNames = {"H", "S", "SDG", "Z", "X", "Y", "CZ", "CNOT", "CS"};

// Splits the non-comment part of each line into tokens, dropping empty lines.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize(std::istream &in) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) {
            tokens.push_back(tok);
        }
        if (!tokens.empty()) {
            out.emplace_back(line_no, std::move(tokens));
        }
    }
    return out;
}

std::size_t parse_index(const std::string &tok, std::size_t line_no) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        if (tok.empty() || !std::isdigit(static_cast<unsigned char>(tok[0]))) {
            throw std::invalid_argument(tok);
        }
        v = std::stoull(tok, &pos);
    } catch (const std::exception &) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" + tok + "'");
    }
    if (pos != tok.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" + tok + "'");
    }
    return static_cast<std::size_t>(v);
}

std::string where(std::size_t line_no) {
    return "line " + std::to_string(line_no) + ": ";
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    return kGateNames[static_cast<std::size_t>(kind)];
}

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CZ || kind == GateKind::CNOT || kind == GateKind::CS;
}

void Circuit::append(GateKind kind, uint32_t q0, uint32_t q1) {
    if (q0 >= n_ || (is_two_qubit(kind) && q1 >= n_)) {
        throw std::out_of_range(std::string(gate_name(kind)) + ": qubit index out of range for a " +
                                std::to_string(n_) + "-qubit circuit");
    }
    if (is_two_qubit(kind) && q0 == q1) {
        throw std::invalid_argument(std::string(gate_name(kind)) + ": qubit indices must be distinct");
    }
    gates_.push_back({kind, q0, is_two_qubit(kind) ? q1 : 0});
}

std::size_t Circuit::hadamard_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.kind == GateKind::H; }));
}

bool Circuit::is_stabilizer() const {
    return std::none_of(gates_.begin(), gates_.end(), [](const Gate &g) { return g.kind == GateKind::CS; });
}

void Graph::toggle_edge(std::size_t i, std::size_t j) {
    if (i >= num_nodes() || j >= num_nodes()) {
        throw std::out_of_range("Graph: node index out of range");
    }
    if (i == j) {
        throw std::invalid_argument("Graph: self-interaction belongs in a loop weight, not an edge");
    }
    adj_.flip(i, j);
    adj_.flip(j, i);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < num_nodes(); i++) {
        for (std::size_t j = i + 1; j < num_nodes(); j++) {
            if (adj_.get(i, j)) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

std::size_t Graph::num_edges() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < num_nodes(); i++) {
        total += and_popcount(adj_.row(i), adj_.row(i));
    }
    return total / 2;
}

bool Graph::is_simple() const {
    return std::all_of(loops_.begin(), loops_.end(), [](uint8_t w) { return w == 0; });
}

Circuit graph_to_circuit(const Graph &g) {
    const auto n = static_cast<uint32_t>(g.num_nodes());
    Circuit c(n);
    for (uint32_t i = 0; i < n; i++) {
        c.append(GateKind::H, i);
    }
    for (auto [i, j] : g.edges()) {
        c.append(GateKind::CZ, static_cast<uint32_t>(i), static_cast<uint32_t>(j));
    }
    for (uint32_t i = 0; i < n; i++) {
        uint8_t w = g.loop(i);
        if (w & 2) {
            c.append(GateKind::Z, i);
        }
        if (w & 1) {
            c.append(GateKind::S, i);
        }
    }
    for (uint32_t i = 0; i < n; i++) {
        c.append(GateKind::H, i);
    }
    return c;
}

Circuit read_stab(std::istream &in) {
    auto lines = tokenize(in);
    if (lines.empty() || lines[0].second.size() != 2 || lines[0].second[0] != "qubits") {
        throw ParseError(".stab: first line must be 'qubits n'");
    }
    Circuit c(parse_index(lines[0].second[1], lines[0].first));
    for (std::size_t k = 1; k < lines.size(); k++) {
        const auto &[line_no, tokens] = lines[k];
        std::string name = tokens[0];
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
        auto it = std::find(kGateNames.begin(), kGateNames.end(), name);
        if (it == kGateNames.end()) {
            throw ParseError(where(line_no) + "unknown gate '" + tokens[0] + "'");
        }
        auto kind = static_cast<GateKind>(it - kGateNames.begin());
        std::size_t arity = is_two_qubit(kind) ? 2 : 1;
        if (tokens.size() != arity + 1) {
            throw ParseError(where(line_no) + std::string(gate_name(kind)) + " takes " + std::to_string(arity) +
                             " qubit index(es)");
        }
        std::size_t q0 = parse_index(tokens[1], line_no);
        std::size_t q1 = arity == 2 ? parse_index(tokens[2], line_no) : 0;
        if (q0 >= c.num_qubits() || q1 >= c.num_qubits() || (arity == 2 && q0 == q1)) {
            throw ParseError(where(line_no) + "bad qubit index for " + std::string(gate_name(kind)));
        }
        c.append(kind, static_cast<uint32_t>(q0), static_cast<uint32_t>(q1));
    }
    return c;
}

Circuit read_stab_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    return read_stab(in);
}

void write_stab(std::ostream &out, const Circuit &c) {
    out << "qubits " << c.num_qubits() << "\n";
    for (const Gate &g : c.gates()) {
        out << gate_name(g.kind) << " " << g.q0;
        if (is_two_qubit(g.kind)) {
            out << " " << g.q1;
        }
        out << "\n";
    }
}

Graph read_graph(std::istream &in) {
    auto lines = tokenize(in);
    if (lines.empty() || lines[0].second.size() != 2 || lines[0].second[0] != "nodes") {
        throw ParseError(".graph: first line must be 'nodes n'");
    }
    Graph g(parse_index(lines[0].second[1], lines[0].first));
    for (std::size_t k = 1; k < lines.size(); k++) {
        const auto &[line_no, tokens] = lines[k];
        if (tokens.size() != 3 || (tokens[0] != "edge" && tokens[0] != "loop")) {
            throw ParseError(where(line_no) + "expected 'edge i j' or 'loop i a'");
        }
        std::size_t i = parse_index(tokens[1], line_no);
        std::size_t j = parse_index(tokens[2], line_no);
        if (i >= g.num_nodes()) {
            throw ParseError(where(line_no) + "node index out of range");
        }
        if (tokens[0] == "edge") {
            if (j >= g.num_nodes() || i == j) {
                throw ParseError(where(line_no) + "edge endpoints must be distinct nodes in range");
            }
            g.toggle_edge(i, j);
        } else {
            if (j > 3) {
                throw ParseError(where(line_no) + "loop weight must be in 0..3");
            }
            g.add_loop(i, static_cast<uint8_t>(j));
        }
    }
    return g;
}

Graph read_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    return read_graph(in);
}

void write_graph(std::ostream &out, const Graph &g) {
    out << "nodes " << g.num_nodes() << "\n";
    for (auto [i, j] : g.edges()) {
        out << "edge " << i << " " << j << "\n";
    }
    for (std::size_t i = 0; i < g.num_nodes(); i++) {
        if (g.loop(i) != 0) {
            out << "loop " << i << " " << static_cast<int>(g.loop(i)) << "\n";
        }
    }
}

}  // namespace stabrank
