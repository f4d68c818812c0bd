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

#ifndef STABRANK_TESTS_TEST_UTIL_HPP
#define STABRANK_TESTS_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "stabrank/circuit.hpp"
#include "stabrank/z4form.hpp"

namespace stabrank::testing {

inline BitVector bits_of(uint64_t value, std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; i++) {
        v.set(i, (value >> i) & 1);
    }
    return v;
}

inline BitVector random_bits(std::size_t n, std::mt19937_64 &rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; i++) {
        v.set(i, rng() & 1);
    }
    return v;
}

inline BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; i++) {
        for (std::size_t j = 0; j < cols; j++) {
            m.set(i, j, bit(rng));
        }
    }
    return m;
}

inline BitMatrix random_symmetric(std::size_t n, std::mt19937_64 &rng, double density = 0.5,
                                  bool zero_diagonal = false) {
    std::bernoulli_distribution bit(density);
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            if ((i != j || !zero_diagonal) && bit(rng)) {
                m.set(i, j);
                m.set(j, i);
            }
        }
    }
    return m;
}

/// Symmetric Z4 matrix with off-diagonal entries in {0,1} and arbitrary diagonal.
inline Z4Matrix random_classical(std::size_t n, std::mt19937_64 &rng, double density = 0.5,
                                 bool even_diagonal = false) {
    std::bernoulli_distribution bit(density);
    Z4Matrix a(n);
    for (std::size_t i = 0; i < n; i++) {
        uint8_t d = static_cast<uint8_t>(rng() % 4);
        a.set(i, i, even_diagonal ? static_cast<uint8_t>(d & 2) : d);
        for (std::size_t j = i + 1; j < n; j++) {
            if (bit(rng)) {
                a.set(i, j, 1);
                a.set(j, i, 1);
            }
        }
    }
    return a;
}

inline Circuit random_circuit(std::size_t n, std::size_t gates, std::mt19937_64 &rng, bool allow_cs = false) {
    static constexpr GateKind kinds[] = {GateKind::H,  GateKind::S,  GateKind::Sdg,  GateKind::Z, GateKind::X,
                                         GateKind::Y,  GateKind::CZ, GateKind::CNOT, GateKind::CS};
    const std::size_t choices = allow_cs ? 9 : 8;
    Circuit c(n);
    while (c.gates().size() < gates) {
        GateKind kind = kinds[rng() % choices];
        auto q0 = static_cast<uint32_t>(rng() % n);
        if (is_two_qubit(kind)) {
            if (n < 2) {
                continue;
            }
            auto q1 = static_cast<uint32_t>(rng() % (n - 1));
            c.append(kind, q0, q1 >= q0 ? q1 + 1 : q1);
        } else {
            c.append(kind, q0);
        }
    }
    return c;
}

/// Circuit with an H layer, random CZ/CNOT/phase gates, and a closing H layer, so that most
/// amplitudes are nonzero and forms have many variables.
inline Circuit random_layered_circuit(std::size_t n, std::size_t gates, std::mt19937_64 &rng) {
    Circuit c(n);
    for (uint32_t i = 0; i < n; i++) {
        c.append(GateKind::H, static_cast<uint32_t>(i));
    }
    Circuit middle = random_circuit(n, gates, rng);
    for (const Gate &g : middle.gates()) {
        c.append(g);
    }
    for (uint32_t i = 0; i < n; i++) {
        c.append(GateKind::H, static_cast<uint32_t>(i));
    }
    return c;
}

inline std::string data_path(const std::string &name) {
    return std::string(STABRANK_TEST_DATA_DIR) + "/" + name;
}

}  // namespace stabrank::testing

#endif
