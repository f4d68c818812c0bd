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

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "stabrank/oracle.hpp"

namespace stabrank {

namespace {

constexpr std::size_t kMaxCanonicalNodes = 11;
constexpr std::size_t kMaxEnumerationNodes = 8;

std::size_t pair_count(std::size_t n) {
    return n * (n - 1) / 2;
}

// Pair (i, j), i < j, in row-major order k gets bit (pairs - 1 - k), so earlier pairs dominate.
uint64_t code_for_order(const std::vector<uint32_t> &adj, const std::vector<std::size_t> &order) {
    const std::size_t n = order.size();
    uint64_t code = 0;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            code = (code << 1) | ((adj[order[i]] >> order[j]) & 1);
        }
    }
    return code;
}

// Iterated degree refinement. Colors are ranks of (old color, sorted neighbor colors), which is
// invariant under relabeling.
std::vector<std::size_t> refine(const std::vector<uint32_t> &adj) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> color(n, 0);
    std::size_t classes = 1;
    while (true) {
        std::vector<std::vector<std::size_t>> sig(n);
        for (std::size_t v = 0; v < n; v++) {
            sig[v].push_back(color[v]);
            std::vector<std::size_t> nb;
            for (std::size_t u = 0; u < n; u++) {
                if ((adj[v] >> u) & 1) {
                    nb.push_back(color[u]);
                }
            }
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < n; v++) {
            color[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        }
        if (sorted.size() == classes) {
            return color;
        }
        classes = sorted.size();
    }
}

std::vector<uint32_t> adjacency_masks(const Graph &g) {
    std::vector<uint32_t> adj(g.num_nodes(), 0);
    for (std::size_t i = 0; i < g.num_nodes(); i++) {
        for (std::size_t j = 0; j < g.num_nodes(); j++) {
            if (g.has_edge(i, j)) {
                adj[i] |= uint32_t{1} << j;
            }
        }
    }
    return adj;
}

// Smallest code over orderings that list color classes in color order, and the ordering.
std::pair<uint64_t, std::vector<std::size_t>> canonical_order(const Graph &g) {
    const std::size_t n = g.num_nodes();
    if (n > kMaxCanonicalNodes) {
        throw std::invalid_argument("canonical form: at most " + std::to_string(kMaxCanonicalNodes) + " nodes");
    }
    if (!g.is_simple()) {
        throw std::invalid_argument("canonical form: graph has loops");
    }
    std::vector<uint32_t> adj = adjacency_masks(g);
    std::vector<std::size_t> color = refine(adj);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    std::vector<std::size_t> cell_start;
    for (std::size_t i = 0; i < n; i++) {
        if (i == 0 || color[order[i]] != color[order[i - 1]]) {
            cell_start.push_back(i);
        }
    }
    cell_start.push_back(n);

    uint64_t best = UINT64_MAX;
    std::vector<std::size_t> best_order = order;
    // Odometer over the permutations of every cell; each cell starts sorted ascending.
    while (true) {
        uint64_t code = code_for_order(adj, order);
        if (code < best) {
            best = code;
            best_order = order;
        }
        std::size_t c = 0;
        for (; c + 1 < cell_start.size(); c++) {
            auto first = order.begin() + static_cast<std::ptrdiff_t>(cell_start[c]);
            auto last = order.begin() + static_cast<std::ptrdiff_t>(cell_start[c + 1]);
            if (std::next_permutation(first, last)) {
                break;
            }
        }
        if (c + 1 == cell_start.size()) {
            break;
        }
    }
    return {best, best_order};
}

bool is_connected(const std::vector<uint32_t> &adj) {
    if (adj.empty()) {
        return true;
    }
    uint32_t seen = 1;
    uint32_t frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (uint32_t f = frontier; f; f &= f - 1) {
            next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (adj.size() == 32 ? UINT32_MAX : (uint32_t{1} << adj.size()) - 1);
}

}  // namespace

uint64_t adjacency_code(const Graph &g) {
    std::vector<std::size_t> order(g.num_nodes());
    std::iota(order.begin(), order.end(), 0);
    return code_for_order(adjacency_masks(g), order);
}

Graph graph_from_code(std::size_t n, uint64_t code) {
    if (n > kMaxCanonicalNodes) {
        throw std::invalid_argument("graph_from_code: at most " + std::to_string(kMaxCanonicalNodes) + " nodes");
    }
    Graph g(n);
    std::size_t bit = n < 2 ? 0 : pair_count(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            bit--;
            if ((code >> bit) & 1) {
                g.toggle_edge(i, j);
            }
        }
    }
    return g;
}

uint64_t canonical_code(const Graph &g) {
    return canonical_order(g).first;
}

Graph canonical_graph(const Graph &g) {
    return graph_from_code(g.num_nodes(), canonical_code(g));
}

std::vector<Graph> enumerate_connected(std::size_t n) {
    if (n > kMaxEnumerationNodes) {
        throw std::invalid_argument("enumerate_connected: at most " + std::to_string(kMaxEnumerationNodes) + " nodes");
    }
    if (n == 0) {
        return {};
    }
    // Every connected graph has a vertex whose removal leaves it connected (a leaf of a spanning
    // tree), so joining a new vertex to each nonempty subset of each smaller class reaches all.
    std::vector<uint64_t> codes = {0};
    for (std::size_t m = 2; m <= n; m++) {
        std::vector<uint64_t> next;
        for (uint64_t code : codes) {
            Graph base = graph_from_code(m - 1, code);
            for (uint32_t subset = 1; subset < (uint32_t{1} << (m - 1)); subset++) {
                Graph g(m);
                for (auto [i, j] : base.edges()) {
                    g.toggle_edge(i, j);
                }
                for (std::size_t i = 0; i + 1 < m; i++) {
                    if ((subset >> i) & 1) {
                        g.toggle_edge(i, m - 1);
                    }
                }
                next.push_back(canonical_code(g));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        codes = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (uint64_t code : codes) {
        Graph g = graph_from_code(n, code);
        if (!is_connected(adjacency_masks(g))) {
            throw std::logic_error("enumerate_connected: produced a disconnected graph");
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> enumerate_netzero(std::size_t max_nodes) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_nodes; n++) {
        for (Graph &g : enumerate_connected(n)) {
            if (coloring_counts(g).sign == NetSign::Zero) {
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

}  // namespace stabrank
