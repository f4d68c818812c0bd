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

#ifndef STABRANK_ORACLE_HPP
#define STABRANK_ORACLE_HPP

// Brute-force reference implementations. They work on dense, independent representations and do
// not call the normalization or counting code they are used to check.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "stabrank/circuit.hpp"
#include "stabrank/phase_polynomial.hpp"
#include "stabrank/z4form.hpp"

namespace stabrank {

/// N_c = number of assignments with value c (mod 4).
struct CountVector {
    uint64_t n0 = 0;
    uint64_t n1 = 0;
    uint64_t n2 = 0;
    uint64_t n3 = 0;

    uint64_t total() const { return n0 + n1 + n2 + n3; }
    int64_t d0() const { return static_cast<int64_t>(n0) - static_cast<int64_t>(n2); }
    int64_t d1() const { return static_cast<int64_t>(n1) - static_cast<int64_t>(n3); }
    bool operator==(const CountVector &other) const = default;
};

inline constexpr std::size_t kMaxPathSumVars = 30;

/// Value counts of x^T A x over x in {0,1}^n, for any (possibly non-classical) A.
/// Throws std::invalid_argument for n > kMaxPathSumVars.
CountVector path_sum(const Z4Matrix &a);

/// Value counts of q over its free variables (constant term included). Handles terms of any
/// degree. Throws std::invalid_argument for more than kMaxPathSumVars free variables.
CountVector path_sum(const PhasePolynomial &q);

/// sum_y i^q(y) / 2^(half_divisor_exp/2), or 0 for an infeasible polynomial.
std::complex<double> path_sum_amplitude(const PhasePolynomial &q);

inline constexpr std::size_t kMaxStatevectorQubits = 12;

/// <z|U_C|x> by dense state-vector evolution; qubit i is bit i of the basis index.
std::complex<double> statevector_amplitude(const Circuit &c, const BitVector &x, const BitVector &z);

/// num / 2^den_exp in lowest terms (num odd, or num = 0 with den_exp = 0).
struct Dyadic {
    int64_t num = 0;
    int64_t den_exp = 0;

    static Dyadic make(__int128 num, int64_t den_exp);
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    double to_double() const;
    /// "0", "n" or "n/2^k".
    std::string to_string() const;
    bool operator==(const Dyadic &other) const = default;
};

enum class NetSign : uint8_t { Zero, Positive, Negative };
std::string net_sign_name(NetSign s);

struct NetClass {
    NetSign sign = NetSign::Zero;
    /// a(G) = (c0 - c1) / 2^n.
    Dyadic a_value;
    /// Colorings with an even / odd number of black-black edges (loops of weight 2 count as such
    /// an edge on their node).
    uint64_t c0 = 0;
    uint64_t c1 = 0;
};

inline constexpr std::size_t kMaxColoringNodes = 24;

/// Enumerates all 2^n black/white colorings. Throws std::invalid_argument for odd loop weights
/// (their sum is not real) or more than kMaxColoringNodes nodes.
NetClass coloring_counts(const Graph &g);

inline constexpr std::size_t kMaxPolymatroidEdges = 20;

/// sum over edge subsets A of (-2)^|A| / 2^f(A), f(A) = number of nodes touched by A.
/// Throws std::invalid_argument for loops or more than kMaxPolymatroidEdges edges.
Dyadic polymatroid_sum(const Graph &g);

/// Adjacency code of g after relabeling by the lexicographically smallest code among orderings
/// compatible with an isomorphism-invariant color refinement. Equal for isomorphic simple graphs
/// (up to 11 nodes).
uint64_t canonical_code(const Graph &g);
/// The relabeled graph whose adjacency code is canonical_code(g).
Graph canonical_graph(const Graph &g);
/// Graph whose upper-triangle adjacency code (row-major over i < j) is `code`.
Graph graph_from_code(std::size_t n, uint64_t code);
uint64_t adjacency_code(const Graph &g);

/// Connected simple graphs on exactly n nodes, one canonical graph per isomorphism class, sorted
/// by code. Requires n <= 8.
std::vector<Graph> enumerate_connected(std::size_t n);

/// Net-zero connected simple graphs on 1..max_nodes nodes, sorted by node count then code.
std::vector<Graph> enumerate_netzero(std::size_t max_nodes);

}  // namespace stabrank

#endif
