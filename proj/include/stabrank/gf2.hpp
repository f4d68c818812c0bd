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

#ifndef STABRANK_GF2_HPP
#define STABRANK_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stabrank {

/// Raised by the text-format readers. The CLI maps it to exit code 1.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t words_for_bits(std::size_t bits) {
    return (bits + 63) / 64;
}

/// Fixed-length vector over F2, packed 64 bits per word. Padding bits are zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_(words_for_bits(n), 0) {}

    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool value = true) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }
    bool operator[](std::size_t i) const { return get(i); }

    std::size_t popcount() const;
    bool any() const;
    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    bool operator==(const BitVector &other) const = default;

    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return words_; }

    std::string to_string() const;

   private:
    std::size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense matrix over F2. Row i occupies a contiguous run of words; column j is bit j of that run.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    /// Rows given as strings of '0'/'1'.
    static BitMatrix from_rows(const std::vector<std::string> &rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    bool get(std::size_t i, std::size_t j) const { return (data_[i * stride_ + (j >> 6)] >> (j & 63)) & 1; }
    void set(std::size_t i, std::size_t j, bool value = true) {
        uint64_t mask = uint64_t{1} << (j & 63);
        uint64_t &w = data_[i * stride_ + (j >> 6)];
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t i, std::size_t j) { data_[i * stride_ + (j >> 6)] ^= uint64_t{1} << (j & 63); }

    std::span<uint64_t> row(std::size_t i) { return {data_.data() + i * stride_, stride_}; }
    std::span<const uint64_t> row(std::size_t i) const { return {data_.data() + i * stride_, stride_}; }

    BitVector row_vector(std::size_t i) const;
    void set_row(std::size_t i, const BitVector &v);
    /// row(dst) ^= row(src)
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t i) const;

    BitMatrix transposed() const;
    bool is_symmetric() const;
    bool has_nonzero_diagonal() const;
    BitVector diagonal() const;
    bool is_unit_lower_triangular() const;

    bool operator==(const BitMatrix &other) const = default;

    std::string to_string() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// dst ^= src over a word range.
inline void xor_words(std::span<uint64_t> dst, std::span<const uint64_t> src) {
    for (std::size_t k = 0; k < dst.size(); k++) {
        dst[k] ^= src[k];
    }
}

inline std::size_t and_popcount(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    std::size_t total = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        total += std::popcount(a[k] & b[k]);
    }
    return total;
}

/// Exact product over F2. Throws std::invalid_argument on a dimension mismatch.
BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b);

/// y = a x over F2.
BitVector mat_vec(const BitMatrix &a, const BitVector &x);

/// Row rank over F2 (packed Gaussian elimination).
std::size_t rank(const BitMatrix &a);

enum class BlockKind : uint8_t {
    Unit1,   // [1]
    Zero1,   // [0]
    Block2,  // [[0,1],[1,0]]
};

/// Block-diagonal matrix over F2 made of Unit1, Zero1 and Block2 blocks.
struct BlockDiag {
    std::vector<BlockKind> blocks;

    std::size_t dimension() const;
    std::size_t rank() const;
    std::size_t count(BlockKind kind) const;
    BitMatrix expand() const;
    bool operator==(const BlockDiag &other) const = default;
};

enum class PivotOrder : uint8_t {
    LowestIndex,
    HighestIndex,
};

/// P^T B P = L D L^T, with the permutation kept as an index array:
/// position t of the permuted basis holds original index perm[t].
struct Pldlt {
    std::vector<std::size_t> perm;
    BitMatrix lower;
    BlockDiag diag;

    BitMatrix permutation_matrix() const;
    /// P L D L^T P^T, which must equal the decomposed matrix.
    BitMatrix reconstruct() const;
};

/// Symmetric PLDL^T over F2. 1x1 pivots (nonzero diagonal) are preferred over 2x2 pivots; ties go
/// to the lowest original index unless `order` says otherwise. Throws std::invalid_argument for an
/// asymmetric input.
Pldlt pldlt(const BitMatrix &b, PivotOrder order = PivotOrder::LowestIndex);

/// Inverse of a unit lower triangular matrix. Throws std::invalid_argument otherwise.
BitMatrix lower_tri_inverse(const BitMatrix &l);

/// `.f2` text format: "rows cols" then one line of 0/1 characters per row.
BitMatrix read_f2(std::istream &in);
BitMatrix read_f2_file(const std::string &path);
void write_f2(std::ostream &out, const BitMatrix &m);

}  // namespace stabrank

#endif
