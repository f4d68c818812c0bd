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

#include "stabrank/simulate.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "stabrank/oracle.hpp"
#include "test_util.hpp"

using namespace stabrank;
using stabrank::testing::bits_of;
using stabrank::testing::random_bits;
using stabrank::testing::random_circuit;
using stabrank::testing::random_layered_circuit;
using stabrank::testing::random_matrix;

namespace {

Circuit single(GateKind kind) {
    Circuit c(1);
    c.append(kind, 0);
    return c;
}

/// Random self-dual form on 2n variables with partner i <-> i + n, including cross terms that
/// straddle the two halves.
SelfDualForm random_self_dual(std::size_t n, std::mt19937_64 &rng) {
    const std::size_t m = 2 * n;
    BitMatrix b(m, m);
    BitVector v(m);
    std::vector<std::size_t> partner(m);
    for (std::size_t i = 0; i < n; i++) {
        partner[i] = n + i;
        partner[n + i] = i;
        uint8_t a = static_cast<uint8_t>(rng() % 4);
        uint8_t neg = static_cast<uint8_t>((4 - a) & 3);
        b.set(i, i, a & 1);
        v.set(i, a >> 1);
        b.set(n + i, n + i, neg & 1);
        v.set(n + i, neg >> 1);
    }
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t j = i + 1; j < m; j++) {
            if (partner[i] == j || rng() % 4 != 0) {
                continue;
            }
            for (auto [x, y] : {std::pair{i, j}, std::pair{partner[i], partner[j]}}) {
                b.set(x, y);
                b.set(y, x);
            }
        }
    }
    return {QuadForm(std::move(b), std::move(v)), std::move(partner)};
}

int64_t diff02(const QuadForm &f) {
    return path_sum(f.to_z4()).d0();
}

}  // namespace

TEST(dyadic_amplitude, formatting_and_equality) {
    DyadicAmplitude a{SignedPow2::pow2(0), SignedPow2::zero(), 1};
    EXPECT_EQ(a.to_string(), "2^0/2^(1/2)");
    DyadicAmplitude b{SignedPow2::pow2(1), SignedPow2::zero(), 3};
    EXPECT_EQ(a, b);
    DyadicAmplitude c{SignedPow2::pow2(0, -1), SignedPow2::pow2(0), 0};
    EXPECT_EQ(c.to_string(), "-2^0+i*2^0");
    EXPECT_EQ(DyadicAmplitude{}.to_string(), "0");
    EXPECT_NEAR(std::abs(a.to_complex() - std::complex<double>(std::sqrt(0.5), 0)), 0, 1e-15);
}

TEST(probability, formatting) {
    EXPECT_EQ(Probability::zero().to_string(), "0");
    EXPECT_EQ(Probability::pow2(0).to_string(), "1");
    EXPECT_EQ(Probability::pow2(-4).to_string(), "2^-4");
    EXPECT_EQ(squared_magnitude(DyadicAmplitude{SignedPow2::pow2(0), SignedPow2::pow2(0, -1), 3}),
              Probability::pow2(-2));
    EXPECT_THROW(squared_magnitude(DyadicAmplitude{SignedPow2::pow2(1), SignedPow2::pow2(0), 0}), std::logic_error);
}

TEST(amplitude, single_gates) {
    BitVector zero(1);
    BitVector one = BitVector::from_string("1");
    EXPECT_EQ(amplitude(single(GateKind::H), zero, one).to_complex(), std::complex<double>(std::sqrt(0.5), 0));
    EXPECT_NEAR(std::abs(amplitude(single(GateKind::H), one, one).to_complex() + std::sqrt(0.5)), 0, 1e-15);
    EXPECT_EQ(amplitude(single(GateKind::S), one, one), (DyadicAmplitude{SignedPow2::zero(), SignedPow2::pow2(0), 0}));
    EXPECT_EQ(amplitude(single(GateKind::Y), zero, one), (DyadicAmplitude{SignedPow2::zero(), SignedPow2::pow2(0), 0}));
    EXPECT_EQ(amplitude(single(GateKind::Y), one, zero),
              (DyadicAmplitude{SignedPow2::zero(), SignedPow2::pow2(0, -1), 0}));
    EXPECT_TRUE(amplitude(single(GateKind::X), zero, zero).is_zero());
}

TEST(amplitude, triangle_graph_state_vanishes) {
    Graph g(3);
    g.toggle_edge(0, 1);
    g.toggle_edge(0, 2);
    g.toggle_edge(1, 2);
    DyadicAmplitude a = amplitude(graph_to_circuit(g), BitVector(3), BitVector(3));
    EXPECT_TRUE(a.is_zero());
    EXPECT_EQ(a.to_string(), "0");
    EXPECT_TRUE(probability(graph_to_circuit(g), BitVector(3), BitVector(3)).is_zero);
}

TEST(amplitude, rejects_cs_and_bad_lengths) {
    Circuit c(2);
    c.append(GateKind::CS, 0, 1);
    EXPECT_THROW(amplitude(c, BitVector(2), BitVector(2)), std::invalid_argument);
    EXPECT_THROW(amplitude(Circuit(2), BitVector(1), BitVector(2)), std::invalid_argument);
}

TEST(amplitude, matches_statevector) {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 400; t++) {
        std::size_t n = 1 + rng() % 8;
        Circuit c = t % 2 ? random_circuit(n, rng() % 61, rng) : random_layered_circuit(n, rng() % 40, rng);
        BitVector x = random_bits(n, rng);
        BitVector z = random_bits(n, rng);
        DyadicAmplitude a = amplitude(c, x, z);
        std::complex<double> expected = statevector_amplitude(c, x, z);
        ASSERT_LT(std::abs(a.to_complex() - expected), 1e-10) << "trial " << t;
        Probability p = probability(c, x, z);
        EXPECT_EQ(p, squared_magnitude(a)) << "trial " << t;
    }
}

TEST(probability, single_hadamard) {
    EXPECT_EQ(probability(single(GateKind::H), BitVector(1), BitVector(1)), Probability::pow2(-1));
    EXPECT_EQ(probability(Circuit(3), BitVector(3), BitVector(3)), Probability::pow2(0));
    EXPECT_EQ(probability(Circuit(3), BitVector(3), BitVector::from_string("010")), Probability::zero());
}

TEST(probability, identity_two_by_two) {
    Graph g = rank_to_graph(BitMatrix::identity(2));
    EXPECT_EQ(g.num_nodes(), 4u);
    EXPECT_EQ(g.num_edges(), 2u);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(1, 3));
    Probability p = probability(graph_to_circuit(g), BitVector(4), BitVector(4));
    EXPECT_EQ(p, Probability::pow2(-4));
    EXPECT_EQ(rank_from_probability(p, 4), 2u);
}

TEST(rank_from_probability, rejects_broken_promises) {
    EXPECT_EQ(rank_from_probability(Probability::pow2(0), 0), 0u);
    EXPECT_THROW(rank_from_probability(Probability::zero(), 4), PromiseViolation);
    EXPECT_THROW(rank_from_probability(Probability::pow2(-3), 4), PromiseViolation);
    EXPECT_THROW(rank_from_probability(Probability::pow2(-6), 4), PromiseViolation);
    EXPECT_THROW(rank_from_probability(Probability::pow2(2), 4), PromiseViolation);
}

TEST(rank_via_simulation, matches_rank) {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 60; t++) {
        std::size_t rows = 1 + rng() % 64;
        std::size_t cols = 1 + rng() % 64;
        double density = (1 + rng() % 9) / 10.0;
        BitMatrix a = random_matrix(rows, cols, rng, density);
        if (t % 5 == 0) {
            // Force a rank deficit by duplicating rows.
            for (std::size_t i = 1; i < rows; i += 2) {
                a.set_row(i, a.row_vector(i - 1));
            }
        }
        EXPECT_EQ(rank_via_simulation(a), rank(a)) << rows << "x" << cols;
    }
    EXPECT_EQ(rank_via_simulation(BitMatrix(3, 5)), 0u);
}

TEST(self_dual, from_form_pairs_terms) {
    QuadForm f(BitMatrix::from_rows({"11", "10"}), BitVector::from_string("01"));
    SelfDualForm sd = SelfDualForm::from_form(f);
    EXPECT_NO_THROW(sd.validate());
    EXPECT_EQ(sd.partner, (std::vector<std::size_t>{2, 3, 0, 1}));
    Z4Matrix a = sd.form.to_z4();
    EXPECT_EQ(a.get(0, 0), 1);
    EXPECT_EQ(a.get(2, 2), 3);
    EXPECT_EQ(a.get(1, 1), 2);
    EXPECT_EQ(a.get(3, 3), 2);
    EXPECT_EQ(a.get(2, 3), 1);
    EXPECT_EQ(a.get(0, 3), 0);
}

TEST(self_dual, validate_rejects_unpaired_terms) {
    SelfDualForm bad_pairing{QuadForm(BitMatrix(2, 2), BitVector(2)), {0, 1}};
    EXPECT_THROW(bad_pairing.validate(), std::invalid_argument);
    SelfDualForm bad_square{QuadForm(BitMatrix::from_rows({"10", "00"}), BitVector(2)), {1, 0}};
    EXPECT_THROW(bad_square.validate(), std::invalid_argument);
    SelfDualForm bad_cross{QuadForm(BitMatrix::from_rows({"0100", "1000", "0000", "0000"}), BitVector(4)), {2, 3, 0, 1}};
    EXPECT_THROW(bad_cross.validate(), std::invalid_argument);
    SelfDualForm fixed_cross{QuadForm(BitMatrix::from_rows({"01", "10"}), BitVector(2)), {1, 0}};
    EXPECT_THROW(fixed_cross.validate(), std::invalid_argument);
}

TEST(self_dual, odd_pairs_without_cross_terms) {
    // f = 3u + u' + 3v + v' with variables ordered (u, v, u', v').
    SelfDualForm f{QuadForm(BitMatrix::from_rows({"1000", "0100", "0010", "0001"}), BitVector::from_string("1100")),
                   {2, 3, 0, 1}};
    AlternatingReduction r = self_dual_to_alternating(f);
    ASSERT_TRUE(r.eliminated.has_value());
    EXPECT_EQ(*r.eliminated, 1u);
    EXPECT_EQ(r.sum_of, (std::vector<std::size_t>{0, 2, 3}));
    EXPECT_EQ(r.kept, (std::vector<std::size_t>{0, 2, 3}));
    // 2u^2 + 2uu' + 2uv' + 2u'v' on (u, u', v').
    EXPECT_EQ(r.form.to_z4(), Z4Matrix::from_entries({{2, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    EXPECT_TRUE(r.form.alternating());
}

TEST(self_dual, reduction_agrees_on_subspace) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 200; t++) {
        std::size_t n = 1 + rng() % 6;
        SelfDualForm f = random_self_dual(n, rng);
        const std::size_t m = 2 * n;
        CountVector full = path_sum(f.form.to_z4());
        EXPECT_EQ(full.n1, full.n3);
        bool has_odd = f.form.b.has_nonzero_diagonal();
        EXPECT_EQ(full.n1 + full.n3, has_odd ? uint64_t{1} << (m - 1) : 0u);
        for (uint64_t bits = 0; bits < (uint64_t{1} << m); bits++) {
            BitVector a = bits_of(bits, m);
            BitVector pa(m);
            for (std::size_t i = 0; i < m; i++) {
                pa.set(f.partner[i], a[i]);
            }
            ASSERT_EQ((evaluate(f.form, a) + evaluate(f.form, pa)) & 3, 0);
        }

        AlternatingReduction r = self_dual_to_alternating(f);
        EXPECT_TRUE(r.form.alternating());
        EXPECT_EQ(diff02(r.form), full.d0());
        const std::size_t k = r.kept.size();
        for (uint64_t bits = 0; bits < (uint64_t{1} << k); bits++) {
            BitVector a = bits_of(bits, k);
            BitVector lifted(m);
            for (std::size_t i = 0; i < k; i++) {
                lifted.set(r.kept[i], a[i]);
            }
            if (r.eliminated) {
                bool e = false;
                for (std::size_t s : r.sum_of) {
                    e ^= lifted[s];
                }
                lifted.set(*r.eliminated, e);
            }
            ASSERT_EQ(evaluate(r.form, a), evaluate(f.form, lifted)) << "trial " << t;
        }
    }
}

TEST(amplitudes_for_outputs, matches_single_amplitudes) {
    std::mt19937_64 rng(54);
    for (int t = 0; t < 40; t++) {
        std::size_t n = 1 + rng() % 7;
        Circuit c = random_layered_circuit(n, rng() % 40, rng);
        BitVector x = random_bits(n, rng);
        std::vector<BitVector> outputs;
        for (uint64_t z = 0; z < (uint64_t{1} << n); z++) {
            outputs.push_back(bits_of(z, n));
        }
        std::vector<DyadicAmplitude> amps = amplitudes_for_outputs(c, x, outputs);
        ASSERT_EQ(amps.size(), outputs.size());
        double total = 0;
        for (std::size_t k = 0; k < outputs.size(); k++) {
            EXPECT_EQ(amps[k], amplitude(c, x, outputs[k]));
            total += squared_magnitude(amps[k]).to_double();
        }
        EXPECT_EQ(total, 1.0);
    }
}

TEST(amplitudes_for_outputs, rejects_bad_lengths) {
    EXPECT_THROW(amplitudes_for_outputs(Circuit(2), BitVector(2), {BitVector(3)}), std::invalid_argument);
    EXPECT_TRUE(amplitudes_for_outputs(Circuit(2), BitVector(2), {}).empty());
}
