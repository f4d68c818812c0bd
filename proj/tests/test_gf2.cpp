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

#include "stabrank/gf2.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "test_util.hpp"

using namespace stabrank;
using stabrank::testing::random_matrix;
using stabrank::testing::random_symmetric;

namespace {

const BitMatrix kTriangle = BitMatrix::from_rows({"011", "101", "110"});

BitMatrix naive_mul(const BitMatrix &a, const BitMatrix &b) {
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < b.cols(); j++) {
            bool s = false;
            for (std::size_t k = 0; k < a.cols(); k++) {
                s ^= a.get(i, k) && b.get(k, j);
            }
            out.set(i, j, s);
        }
    }
    return out;
}

BitMatrix permuted(const BitMatrix &b, const Pldlt &d) {
    BitMatrix p = d.permutation_matrix();
    return mat_mul(mat_mul(p.transposed(), b), p);
}

}  // namespace

TEST(bit_vector, string_round_trip) {
    BitVector v = BitVector::from_string("0110001");
    EXPECT_EQ(v.size(), 7u);
    EXPECT_EQ(v.popcount(), 3u);
    EXPECT_EQ(v.to_string(), "0110001");
    EXPECT_THROW(BitVector::from_string("01x"), ParseError);
}

TEST(bit_vector, padding_stays_zero) {
    BitVector a(70);
    a.set(69);
    BitVector b(70);
    b.set(3);
    a ^= b;
    EXPECT_EQ(a.popcount(), 2u);
    EXPECT_EQ(a.words()[1] >> 6, 0u);
}

TEST(mat_mul, identity_and_zero) {
    std::mt19937_64 rng(11);
    BitMatrix m = random_matrix(3, 5, rng);
    EXPECT_EQ(mat_mul(BitMatrix::identity(3), m), m);
    EXPECT_EQ(mat_mul(BitMatrix(4, 3), m), BitMatrix(4, 5));
}

TEST(mat_mul, hand_example) {
    BitMatrix a = BitMatrix::from_rows({"11", "01"});
    BitMatrix b = BitMatrix::from_rows({"10", "11"});
    EXPECT_EQ(mat_mul(a, b), BitMatrix::from_rows({"01", "11"}));
}

TEST(mat_mul, dimension_mismatch) {
    EXPECT_THROW(mat_mul(BitMatrix(2, 3), BitMatrix(2, 3)), std::invalid_argument);
}

TEST(mat_mul, agrees_with_triple_loop) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; t++) {
        std::size_t r = 1 + rng() % 64;
        std::size_t k = 1 + rng() % 64;
        std::size_t c = 1 + rng() % 64;
        BitMatrix a = random_matrix(r, k, rng);
        BitMatrix b = random_matrix(k, c, rng);
        EXPECT_EQ(mat_mul(a, b), naive_mul(a, b));
    }
}

TEST(mat_mul, empty_matrices) {
    EXPECT_EQ(mat_mul(BitMatrix(0, 0), BitMatrix(0, 0)), BitMatrix(0, 0));
    EXPECT_EQ(mat_mul(BitMatrix(2, 0), BitMatrix(0, 3)), BitMatrix(2, 3));
}

TEST(rank, examples) {
    for (std::size_t n : {0u, 1u, 5u, 64u, 65u, 130u}) {
        EXPECT_EQ(rank(BitMatrix::identity(n)), n);
        EXPECT_EQ(rank(BitMatrix(n, n)), 0u);
    }
    EXPECT_EQ(rank(kTriangle), 2u);
}

TEST(rank, bounded_by_shape_and_matches_transpose) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; t++) {
        std::size_t r = rng() % 100;
        std::size_t c = rng() % 100;
        BitMatrix m = random_matrix(r, c, rng, 0.2);
        std::size_t k = rank(m);
        EXPECT_LE(k, std::min(r, c));
        EXPECT_EQ(k, rank(m.transposed()));
    }
}

TEST(pldlt, triangle) {
    Pldlt d = pldlt(kTriangle);
    EXPECT_EQ(d.perm, (std::vector<std::size_t>{1, 0, 2}));
    EXPECT_EQ(d.lower, BitMatrix::from_rows({"100", "010", "111"}));
    EXPECT_EQ(d.diag.blocks, (std::vector<BlockKind>{BlockKind::Block2, BlockKind::Zero1}));
    EXPECT_EQ(d.reconstruct(), kTriangle);
}

TEST(pldlt, identity) {
    Pldlt d = pldlt(BitMatrix::identity(6));
    EXPECT_EQ(d.permutation_matrix(), BitMatrix::identity(6));
    EXPECT_EQ(d.lower, BitMatrix::identity(6));
    EXPECT_EQ(d.diag.blocks, std::vector<BlockKind>(6, BlockKind::Unit1));
}

TEST(pldlt, empty) {
    Pldlt d = pldlt(BitMatrix(0, 0));
    EXPECT_TRUE(d.perm.empty());
    EXPECT_EQ(d.diag.dimension(), 0u);
}

TEST(pldlt, rejects_asymmetric) {
    EXPECT_THROW(pldlt(BitMatrix::from_rows({"01", "00"})), std::invalid_argument);
    EXPECT_THROW(pldlt(BitMatrix(2, 3)), std::invalid_argument);
}

TEST(pldlt, reconstruction_is_exact) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 200; t++) {
        std::size_t n = t == 0 ? 16 : rng() % 80;
        BitMatrix b = random_symmetric(n, rng, (rng() % 100) / 100.0, rng() % 3 == 0);
        for (PivotOrder order : {PivotOrder::LowestIndex, PivotOrder::HighestIndex}) {
            Pldlt d = pldlt(b, order);
            EXPECT_TRUE(d.lower.is_unit_lower_triangular());
            EXPECT_EQ(permuted(b, d), mat_mul(mat_mul(d.lower, d.diag.expand()), d.lower.transposed()));
            EXPECT_EQ(d.reconstruct(), b);
            EXPECT_EQ(d.diag.rank(), rank(b));
            EXPECT_EQ(rank(d.diag.expand()), d.diag.count(BlockKind::Unit1) + 2 * d.diag.count(BlockKind::Block2));
        }
    }
}

TEST(pldlt, alternating_has_even_rank_and_no_unit_blocks) {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 100; t++) {
        BitMatrix b = random_symmetric(rng() % 50, rng, 0.4, true);
        Pldlt d = pldlt(b);
        EXPECT_EQ(d.diag.count(BlockKind::Unit1), 0u);
        EXPECT_EQ(d.diag.rank() % 2, 0u);
    }
}

TEST(pldlt, non_alternating_with_lowest_order_is_diagonal_whenever_it_can_be) {
    // A 1x1 pivot is always taken while one exists; Block2s only appear after the remaining
    // Schur complement has become alternating.
    std::mt19937_64 rng(16);
    for (int t = 0; t < 100; t++) {
        BitMatrix b = random_symmetric(1 + rng() % 40, rng, 0.5);
        Pldlt d = pldlt(b);
        bool seen_block = false;
        for (BlockKind k : d.diag.blocks) {
            if (k == BlockKind::Block2) {
                seen_block = true;
            }
            EXPECT_FALSE(seen_block && k == BlockKind::Unit1);
        }
    }
}

TEST(pldlt, pivot_orders_agree_on_blocks) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; t++) {
        bool alternating = t % 2 == 0;
        BitMatrix b = random_symmetric(rng() % 40, rng, 0.5, alternating);
        Pldlt lo = pldlt(b, PivotOrder::LowestIndex);
        Pldlt hi = pldlt(b, PivotOrder::HighestIndex);
        EXPECT_EQ(lo.diag.rank(), hi.diag.rank());
        if (alternating) {
            auto sorted = [](std::vector<BlockKind> v) {
                std::sort(v.begin(), v.end());
                return v;
            };
            EXPECT_EQ(sorted(lo.diag.blocks), sorted(hi.diag.blocks));
        } else if (b.has_nonzero_diagonal()) {
            EXPECT_GT(lo.diag.count(BlockKind::Unit1), 0u);
            EXPECT_GT(hi.diag.count(BlockKind::Unit1), 0u);
        }
    }
}

TEST(lower_tri_inverse, examples) {
    EXPECT_EQ(lower_tri_inverse(BitMatrix::identity(5)), BitMatrix::identity(5));
    BitMatrix l = BitMatrix::from_rows({"100", "010", "111"});
    EXPECT_EQ(lower_tri_inverse(l), l);
}

TEST(lower_tri_inverse, random_round_trip) {
    std::mt19937_64 rng(18);
    for (int t = 0; t < 30; t++) {
        std::size_t n = t == 0 ? 32 : 1 + rng() % 100;
        BitMatrix l = random_matrix(n, n, rng);
        for (std::size_t i = 0; i < n; i++) {
            l.set(i, i);
            for (std::size_t j = i + 1; j < n; j++) {
                l.set(i, j, false);
            }
        }
        BitMatrix inv = lower_tri_inverse(l);
        EXPECT_TRUE(inv.is_unit_lower_triangular());
        EXPECT_EQ(mat_mul(l, inv), BitMatrix::identity(n));
    }
}

TEST(lower_tri_inverse, rejects_bad_input) {
    EXPECT_THROW(lower_tri_inverse(BitMatrix::from_rows({"11", "01"})), std::invalid_argument);
    EXPECT_THROW(lower_tri_inverse(BitMatrix::from_rows({"10", "10"})), std::invalid_argument);
}

TEST(f2_format, round_trip) {
    std::mt19937_64 rng(19);
    BitMatrix m = random_matrix(5, 7, rng);
    std::stringstream s;
    write_f2(s, m);
    EXPECT_EQ(read_f2(s), m);
}

TEST(f2_format, rejects_malformed) {
    std::istringstream ragged("2 3\n101\n10\n");
    EXPECT_THROW(read_f2(ragged), ParseError);
    std::istringstream bad_char("1 2\n12\n");
    EXPECT_THROW(read_f2(bad_char), ParseError);
    std::istringstream missing("3 1\n1\n0\n");
    EXPECT_THROW(read_f2(missing), ParseError);
    std::istringstream header("x\n");
    EXPECT_THROW(read_f2(header), ParseError);
}
