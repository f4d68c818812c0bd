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

#ifndef STABRANK_Z4FORM_HPP
#define STABRANK_Z4FORM_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stabrank/gf2.hpp"

namespace stabrank {

/// Raised when a form has an odd cross-term coefficient and so has no F2 splitting.
class NonClassicalForm : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Square matrix over Z4 held as two F2 bitplanes: entry = lo + 2*hi.
class Z4Matrix {
   public:
    Z4Matrix() = default;
    explicit Z4Matrix(std::size_t n) : lo_(n, n), hi_(n, n) {}
    Z4Matrix(BitMatrix lo, BitMatrix hi);

    /// Row-major entries, each reduced mod 4.
    static Z4Matrix from_entries(const std::vector<std::vector<int>> &entries);

    std::size_t size() const { return lo_.rows(); }
    uint8_t get(std::size_t i, std::size_t j) const {
        return static_cast<uint8_t>(lo_.get(i, j) | (hi_.get(i, j) << 1));
    }
    void set(std::size_t i, std::size_t j, uint8_t value) {
        lo_.set(i, j, value & 1);
        hi_.set(i, j, (value >> 1) & 1);
    }
    void add(std::size_t i, std::size_t j, uint8_t value) { set(i, j, static_cast<uint8_t>((get(i, j) + value) & 3)); }

    const BitMatrix &low_plane() const { return lo_; }
    const BitMatrix &high_plane() const { return hi_; }

    BitMatrix mod2() const { return lo_; }
    Z4Matrix transposed() const { return {lo_.transposed(), hi_.transposed()}; }
    bool is_symmetric() const;
    std::vector<uint8_t> diagonal() const;
    std::vector<std::vector<int>> entries() const;

    /// Representative of the same quadratic form: diagonal kept mod 4, each symmetric
    /// off-diagonal pair reduced to its parity (pairs summing to 0 mod 4 vanish).
    Z4Matrix canonical() const;

    bool operator==(const Z4Matrix &other) const = default;

   private:
    BitMatrix lo_;
    BitMatrix hi_;
};

/// m * a over Z4, where m has 0/1 entries. m is r x n, a is n x n; the result is r x n
/// (returned as a pair of planes since it need not be square).
struct Z4Rect {
    BitMatrix lo;
    BitMatrix hi;
};
Z4Rect z4_left_multiply(const BitMatrix &m, const BitMatrix &a_lo, const BitMatrix &a_hi);

/// m * a * m^T over Z4.
Z4Matrix z4_congruence(const BitMatrix &m, const Z4Matrix &a);

/// f(x) = x^T B x + 2 x.v over Z4 with B symmetric over F2.
struct QuadForm {
    std::size_t n = 0;
    BitMatrix b;
    BitVector v;

    QuadForm() = default;
    QuadForm(BitMatrix b_, BitVector v_);

    bool alternating() const { return !b.has_nonzero_diagonal(); }
    /// A = B + 2 diag(v).
    Z4Matrix to_z4() const;
    bool operator==(const QuadForm &other) const = default;
};

/// Splits a classical Z4 matrix into (B, v). Throws NonClassicalForm for an off-diagonal entry
/// of 2 or 3 and std::invalid_argument for an asymmetric matrix.
QuadForm split(const Z4Matrix &a);

/// Value of f at x, in {0,1,2,3}.
uint8_t evaluate(const QuadForm &f, const BitVector &x);

enum class FormKind : uint8_t { Alternating, NonAlternating };

/// Normal form of a classical form after a change of basis over F2.
///
/// Alternating:    f(y) = 2 sum_{j<g} y_{2j} y_{2j+1} + 2 sum_i w_i y_i
/// NonAlternating: f(y) = sum_{j<r} y_j + 2 sum_i w_i y_i
///
/// Positions 0..r-1 carry the rank part; positions r..n-1 are the tail.
struct NormalForm {
    FormKind kind = FormKind::Alternating;
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t g = 0;
    BitVector w;
    std::vector<uint8_t> d_prime_diag;

    // Counting bookkeeping, recomputed whenever w changes.
    bool tail_cancels = false;  // some w_i = 1 with i >= r
    std::size_t k = 0;          // blocks with (w_2j, w_2j+1) = (1,1)
    std::size_t c = 0;          // tail positions with w_i = 0
    std::size_t d = 0;          // matched (1,3) coefficient pairs
    std::size_t a = 0;          // m = 4a + b, m = n - c - 2d
    std::size_t b = 0;
    int eta = 0;                // 0: leftover coefficients are 1s, 1: they are 3s

    /// Diagonal of the F2 block matrix D: 1 on the rank part of a non-alternating form, else 0.
    uint8_t d_diag(std::size_t i) const { return kind == FormKind::NonAlternating && i < r ? 1 : 0; }
    std::size_t m() const { return n - c - 2 * d; }

    /// Same rank structure with a different w; bookkeeping and d_prime_diag follow.
    NormalForm with_w(BitVector new_w) const;

    static NormalForm from_parts(FormKind kind, std::size_t n, std::size_t r, BitVector w);
};

/// Everything produced on the way to a normal form.
struct Normalization {
    Pldlt decomposition;
    /// Row i is the i-th new basis vector in the original coordinates: x = basis^T y.
    BitMatrix basis;
    /// basis * A * basis^T over Z4.
    Z4Matrix d_prime;
    NormalForm form;
};

/// PLDL^T of B over F2, then D' = L^-1 P^T A P L^-T over Z4, then w from the diagonal of D'.
/// For a non-alternating form whose decomposition still has 2x2 blocks, each block is merged
/// with a 1x1 block so that D becomes diagonal.
Normalization normalize_with_basis(const Z4Matrix &a);
NormalForm normalize(const Z4Matrix &a);

/// `.z4` text format: "n" then n lines of n digits in 0..3, symmetric.
Z4Matrix read_z4(std::istream &in);
Z4Matrix read_z4_file(const std::string &path);
void write_z4(std::ostream &out, const Z4Matrix &a);

}  // namespace stabrank

#endif
