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

#include "stabrank/oracle.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace stabrank {

CountVector path_sum(const Z4Matrix &a) {
    const std::size_t n = a.size();
    if (n > kMaxPathSumVars) {
        throw std::invalid_argument("path_sum: " + std::to_string(n) + " variables is too many to enumerate");
    }
    // Flipping x_k from 0 to 1 adds a_kk + sum_{j != k} (a_kj + a_jk) x_j; masks[k][c] holds the
    // j with cross coefficient c.
    std::vector<std::array<uint32_t, 4>> masks(n, {0, 0, 0, 0});
    std::vector<int> diag(n);
    for (std::size_t k = 0; k < n; k++) {
        diag[k] = a.get(k, k);
        for (std::size_t j = 0; j < n; j++) {
            if (j != k) {
                masks[k][(a.get(k, j) + a.get(j, k)) & 3] |= uint32_t{1} << j;
            }
        }
    }
    std::array<uint64_t, 4> counts{1, 0, 0, 0};
    uint32_t x = 0;
    int value = 0;
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t step = 1; step < total; step++) {
        auto k = static_cast<std::size_t>(std::countr_zero(step));
        uint32_t rest = x & ~(uint32_t{1} << k);
        int delta = diag[k] + std::popcount(masks[k][1] & rest) + 2 * std::popcount(masks[k][2] & rest) +
                    3 * std::popcount(masks[k][3] & rest);
        value += (x >> k & 1) ? -delta : delta;
        x ^= uint32_t{1} << k;
        counts[static_cast<std::size_t>(((value % 4) + 4) % 4)]++;
    }
    return {counts[0], counts[1], counts[2], counts[3]};
}

CountVector path_sum(const PhasePolynomial &q) {
    std::vector<uint32_t> free = q.free_vars();
    if (free.size() > kMaxPathSumVars) {
        throw std::invalid_argument("path_sum: " + std::to_string(free.size()) +
                                    " free variables is too many to enumerate");
    }
    std::vector<int32_t> slot(q.num_vars(), -1);
    for (std::size_t i = 0; i < free.size(); i++) {
        slot[free[i]] = static_cast<int32_t>(i);
    }
    // Each monomial becomes (mask over free variables, coefficient), dropped when a fixed
    // variable in it is 0.
    std::vector<std::pair<uint32_t, int>> terms;
    int constant = q.constant();
    auto add = [&](const std::vector<uint32_t> &m, int c) {
        uint32_t mask = 0;
        for (uint32_t v : m) {
            if (slot[v] >= 0) {
                mask |= uint32_t{1} << slot[v];
            } else if (!*q.fixed_value(v)) {
                return;
            }
        }
        if (mask == 0) {
            constant += c;
        } else {
            terms.emplace_back(mask, c);
        }
    };
    for (uint32_t v = 0; v < q.num_vars(); v++) {
        if (q.linear()[v] != 0) {
            add({v}, q.linear()[v]);
        }
    }
    for (const auto &[key, c] : q.pairs()) {
        add({static_cast<uint32_t>(key >> 32), static_cast<uint32_t>(key)}, c);
    }
    for (const auto &[m, c] : q.higher()) {
        add(m, c);
    }
    std::array<uint64_t, 4> counts{0, 0, 0, 0};
    const uint64_t total = uint64_t{1} << free.size();
    for (uint64_t xs = 0; xs < total; xs++) {
        auto x = static_cast<uint32_t>(xs);
        int value = constant;
        for (const auto &[mask, c] : terms) {
            if ((x & mask) == mask) {
                value += c;
            }
        }
        counts[static_cast<std::size_t>(value & 3)]++;
    }
    return {counts[0], counts[1], counts[2], counts[3]};
}

std::complex<double> path_sum_amplitude(const PhasePolynomial &q) {
    if (q.infeasible) {
        return 0.0;
    }
    CountVector cv = path_sum(q);
    double scale = std::pow(2.0, -0.5 * static_cast<double>(q.half_divisor_exp));
    return {static_cast<double>(cv.d0()) * scale, static_cast<double>(cv.d1()) * scale};
}

std::complex<double> statevector_amplitude(const Circuit &c, const BitVector &x, const BitVector &z) {
    const std::size_t n = c.num_qubits();
    if (n > kMaxStatevectorQubits) {
        throw std::invalid_argument("statevector_amplitude: " + std::to_string(n) + " qubits is too wide");
    }
    if (x.size() != n || z.size() != n) {
        throw std::invalid_argument("statevector_amplitude: basis state length mismatch");
    }
    using cd = std::complex<double>;
    const std::size_t dim = std::size_t{1} << n;
    auto index_of = [&](const BitVector &bits) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; i++) {
            k |= static_cast<std::size_t>(bits.get(i)) << i;
        }
        return k;
    };
    std::vector<cd> psi(dim, 0.0);
    psi[index_of(x)] = 1.0;
    const cd I(0.0, 1.0);
    const double r = std::sqrt(0.5);
    for (const Gate &g : c.gates()) {
        const std::size_t m0 = std::size_t{1} << g.q0;
        const std::size_t m1 = std::size_t{1} << g.q1;
        switch (g.kind) {
            case GateKind::H:
                for (std::size_t k = 0; k < dim; k++) {
                    if (!(k & m0)) {
                        cd a = psi[k];
                        cd b = psi[k | m0];
                        psi[k] = r * (a + b);
                        psi[k | m0] = r * (a - b);
                    }
                }
                break;
            case GateKind::X:
            case GateKind::Y:
                for (std::size_t k = 0; k < dim; k++) {
                    if (!(k & m0)) {
                        cd a = psi[k];
                        cd b = psi[k | m0];
                        // Y = [[0, -i], [i, 0]].
                        psi[k] = g.kind == GateKind::X ? b : -I * b;
                        psi[k | m0] = g.kind == GateKind::X ? a : I * a;
                    }
                }
                break;
            case GateKind::S:
            case GateKind::Sdg:
            case GateKind::Z: {
                cd phase = g.kind == GateKind::S ? I : (g.kind == GateKind::Sdg ? -I : cd(-1.0));
                for (std::size_t k = 0; k < dim; k++) {
                    if (k & m0) {
                        psi[k] *= phase;
                    }
                }
                break;
            }
            case GateKind::CZ:
            case GateKind::CS: {
                cd phase = g.kind == GateKind::CZ ? cd(-1.0) : I;
                for (std::size_t k = 0; k < dim; k++) {
                    if ((k & m0) && (k & m1)) {
                        psi[k] *= phase;
                    }
                }
                break;
            }
            case GateKind::CNOT:
                for (std::size_t k = 0; k < dim; k++) {
                    if ((k & m0) && !(k & m1)) {
                        std::swap(psi[k], psi[k | m1]);
                    }
                }
                break;
        }
    }
    return psi[index_of(z)];
}

Dyadic Dyadic::make(__int128 num, int64_t den_exp) {
    if (num == 0) {
        return {};
    }
    while ((num & 1) == 0) {
        num >>= 1;
        den_exp--;
    }
    while (den_exp < 0) {
        num <<= 1;
        den_exp++;
    }
    if (num > INT64_MAX || num < INT64_MIN) {
        throw std::overflow_error("Dyadic: numerator does not fit in 64 bits");
    }
    return {static_cast<int64_t>(num), den_exp};
}

double Dyadic::to_double() const {
    return std::ldexp(static_cast<double>(num), -static_cast<int>(den_exp));
}

std::string Dyadic::to_string() const {
    if (den_exp == 0) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/2^" + std::to_string(den_exp);
}

std::string net_sign_name(NetSign s) {
    switch (s) {
        case NetSign::Zero:
            return "Zero";
        case NetSign::Positive:
            return "Positive";
        default:
            return "Negative";
    }
}

NetClass coloring_counts(const Graph &g) {
    const std::size_t n = g.num_nodes();
    if (n > kMaxColoringNodes) {
        throw std::invalid_argument("coloring_counts: " + std::to_string(n) + " nodes is too many to enumerate");
    }
    std::vector<uint32_t> adj(n, 0);
    uint32_t loop_mask = 0;
    for (std::size_t i = 0; i < n; i++) {
        if (g.loop(i) & 1) {
            throw std::invalid_argument("coloring_counts: odd loop weight at node " + std::to_string(i));
        }
        if (g.loop(i) == 2) {
            loop_mask |= uint32_t{1} << i;
        }
        for (std::size_t j = 0; j < n; j++) {
            if (g.has_edge(i, j)) {
                adj[i] |= uint32_t{1} << j;
            }
        }
    }
    // Gray-code walk; black nodes are the set bits of x.
    NetClass out;
    out.c0 = 1;
    uint32_t x = 0;
    unsigned parity = 0;
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t step = 1; step < total; step++) {
        auto k = static_cast<std::size_t>(std::countr_zero(step));
        parity ^= static_cast<unsigned>(std::popcount(adj[k] & x) + ((loop_mask >> k) & 1)) & 1;
        x ^= uint32_t{1} << k;
        (parity ? out.c1 : out.c0)++;
    }
    out.a_value = Dyadic::make(static_cast<__int128>(out.c0) - static_cast<__int128>(out.c1), static_cast<int64_t>(n));
    out.sign = out.a_value.num == 0 ? NetSign::Zero : (out.a_value.num > 0 ? NetSign::Positive : NetSign::Negative);
    return out;
}

Dyadic polymatroid_sum(const Graph &g) {
    if (!g.is_simple()) {
        throw std::invalid_argument("polymatroid_sum: graph has loops");
    }
    auto edges = g.edges();
    if (edges.size() > kMaxPolymatroidEdges) {
        throw std::invalid_argument("polymatroid_sum: " + std::to_string(edges.size()) + " edges is too many");
    }
    const std::size_t n = g.num_nodes();
    if (n > 64) {
        throw std::invalid_argument("polymatroid_sum: more than 64 nodes");
    }
    std::vector<uint64_t> touch(edges.size());
    for (std::size_t e = 0; e < edges.size(); e++) {
        touch[e] = (uint64_t{1} << edges[e].first) | (uint64_t{1} << edges[e].second);
    }
    // Common denominator 2^n: each term is (-2)^|A| 2^(n - f(A)).
    __int128 total = 0;
    const uint64_t subsets = uint64_t{1} << edges.size();
    for (uint64_t s = 0; s < subsets; s++) {
        uint64_t nodes = 0;
        for (uint64_t rest = s; rest; rest &= rest - 1) {
            nodes |= touch[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        int size = std::popcount(s);
        __int128 term = static_cast<__int128>(1) << (size + static_cast<int>(n) - std::popcount(nodes));
        total += (size % 2 == 0) ? term : -term;
    }
    return Dyadic::make(total, static_cast<int64_t>(n));
}

}  // namespace stabrank
