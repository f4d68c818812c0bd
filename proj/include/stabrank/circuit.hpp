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

#ifndef STABRANK_CIRCUIT_HPP
#define STABRANK_CIRCUIT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabrank/gf2.hpp"

namespace stabrank {

enum class GateKind : uint8_t { H, S, Sdg, Z, X, Y, CZ, CNOT, CS };

std::string_view gate_name(GateKind kind);
bool is_two_qubit(GateKind kind);

/// For CNOT, q0 is the control and q1 the target. Single-qubit gates ignore q1.
struct Gate {
    GateKind kind = GateKind::H;
    uint32_t q0 = 0;
    uint32_t q1 = 0;

    bool operator==(const Gate &other) const = default;
};

class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t n) : n_(n) {}

    std::size_t num_qubits() const { return n_; }
    const std::vector<Gate> &gates() const { return gates_; }

    /// Throws std::out_of_range for a bad index and std::invalid_argument for a repeated one.
    void append(GateKind kind, uint32_t q0, uint32_t q1 = 0);
    void append(const Gate &gate) { append(gate.kind, gate.q0, gate.q1); }

    std::size_t hadamard_count() const;
    /// True when no CS gate is present.
    bool is_stabilizer() const;

    bool operator==(const Circuit &other) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<Gate> gates_;
};

/// Undirected graph with F2 edge multiplicities and Z4 loop weights.
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, n), loops_(n, 0) {}

    std::size_t num_nodes() const { return loops_.size(); }
    /// Toggles the edge {i, j}; i == j is rejected (use add_loop).
    void toggle_edge(std::size_t i, std::size_t j);
    bool has_edge(std::size_t i, std::size_t j) const { return adj_.get(i, j); }
    void add_loop(std::size_t i, uint8_t weight) { loops_.at(i) = static_cast<uint8_t>((loops_[i] + weight) & 3); }
    uint8_t loop(std::size_t i) const { return loops_.at(i); }

    const BitMatrix &adjacency() const { return adj_; }
    const std::vector<uint8_t> &loops() const { return loops_; }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::size_t num_edges() const;
    bool is_simple() const;

    bool operator==(const Graph &other) const = default;

   private:
    BitMatrix adj_;
    std::vector<uint8_t> loops_;
};

/// H on every line, CZ per edge, Z^(w/2) S^(w%2) per loop of weight w, H on every line.
Circuit graph_to_circuit(const Graph &g);

/// `.stab`: "qubits n", then one gate per line ("H 0", "CNOT 1 3", ...), '#' comments.
Circuit read_stab(std::istream &in);
Circuit read_stab_file(const std::string &path);
void write_stab(std::ostream &out, const Circuit &c);

/// `.graph`: "nodes n", then "edge i j" and "loop i a" lines, '#' comments.
Graph read_graph(std::istream &in);
Graph read_graph_file(const std::string &path);
void write_graph(std::ostream &out, const Graph &g);

}  // namespace stabrank

#endif
