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

#include "stabrank/z4form.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace stabrank {

Z4Matrix::Z4Matrix(BitMatrix lo, BitMatrix hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.rows() != lo_.cols() || hi_.rows() != lo_.rows() || hi_.cols() != lo_.cols()) {
        throw std::invalid_argument("Z4Matrix: planes must be square and of equal size");
    }
}

Z4Matrix Z4Matrix::from_entries(const std::vector<std::vector<int>> &entries) {
    Z4Matrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); i++) {
        if (entries[i].size() != entries.size()) {
            throw std::invalid_argument("Z4Matrix: entries must form a square matrix");
        }
        for (std::size_t j = 0; j < entries.size(); j++) {
            m.set(i, j, static_cast<uint8_t>(((entries[i][j] % 4) + 4) % 4));
        }
    }
    return m;
}

bool Z4Matrix::is_symmetric() const {
    return lo_.is_symmetric() && hi_.is_symmetric();
}

std::vector<uint8_t> Z4Matrix::diagonal() const {
    std::vector<uint8_t> d(size());
    for (std::size_t i = 0; i < size(); i++) {
        d[i] = get(i, i);
    }
    return d;
}

std::vector<std::vector<int>> Z4Matrix::entries() const {
    std::vector<std::vector<int>> e(size(), std::vector<int>(size()));
    for (std::size_t i = 0; i < size(); i++) {
        for (std::size_t j = 0; j < size(); j++) {
            e[i][j] = get(i, j);
        }
    }
    return e;
}

Z4Matrix Z4Matrix::canonical() const {
    Z4Matrix out(size());
    for (std::size_t i = 0; i < size(); i++) {
        out.set(i, i, get(i, i));
        for (std::size_t j = i + 1; j < size(); j++) {
            // x^T A x picks up (a_ij + a_ji) x_i x_j; only its value mod 4 matters.
            if ((get(i, j) + get(j, i)) % 2 != 0) {
                throw NonClassicalForm("canonical: odd cross-term coefficient");
            }
            uint8_t parity = static_cast<uint8_t>(((get(i, j) + get(j, i)) / 2) & 1);
            out.set(i, j, parity);
            out.set(j, i, parity);
        }
    }
    return out;
}

namespace {

// (lo, hi) += (l, h) over Z4, word-parallel.
inline void z4_accumulate(std::span<uint64_t> lo, std::span<uint64_t> hi, std::span<const uint64_t> l,
                          std::span<const uint64_t> h) {
    for (std::size_t k = 0; k < lo.size(); k++) {
        uint64_t carry = lo[k] & l[k];
        lo[k] ^= l[k];
        hi[k] ^= h[k] ^ carry;
    }
}

}  // namespace

Z4Rect z4_left_multiply(const BitMatrix &m, const BitMatrix &a_lo, const BitMatrix &a_hi) {
    if (m.cols() != a_lo.rows()) {
        throw std::invalid_argument("z4_left_multiply: dimension mismatch");
    }
    Z4Rect out{BitMatrix(m.rows(), a_lo.cols()), BitMatrix(m.rows(), a_lo.cols())};
    for (std::size_t i = 0; i < m.rows(); i++) {
        auto lo = out.lo.row(i);
        auto hi = out.hi.row(i);
        auto mr = m.row(i);
        for (std::size_t w = 0; w < mr.size(); w++) {
            uint64_t bits = mr[w];
            while (bits) {
                std::size_t k = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                z4_accumulate(lo, hi, a_lo.row(k), a_hi.row(k));
            }
        }
    }
    return out;
}

Z4Matrix z4_congruence(const BitMatrix &m, const Z4Matrix &a) {
    if (!a.is_symmetric()) {
        throw std::invalid_argument("z4_congruence: matrix must be symmetric");
    }
    // M A M^T = M (M A)^T for symmetric A.
    Z4Rect ma = z4_left_multiply(m, a.low_plane(), a.high_plane());
    Z4Rect result = z4_left_multiply(m, ma.lo.transposed(), ma.hi.transposed());
    return {std::move(result.lo), std::move(result.hi)};
}

QuadForm::QuadForm(BitMatrix b_, BitVector v_) : n(b_.rows()), b(std::move(b_)), v(std::move(v_)) {
    if (b.rows() != b.cols() || v.size() != n) {
        throw std::invalid_argument("QuadForm: B must be square and v must match its size");
    }
    if (!b.is_symmetric()) {
        throw std::invalid_argument("QuadForm: B must be symmetric");
    }
}

Z4Matrix QuadForm::to_z4() const {
    BitMatrix hi(n, n);
    for (std::size_t i = 0; i < n; i++) {
        if (v.get(i)) {
            hi.set(i, i);
        }
    }
    return {b, std::move(hi)};
}

QuadForm split(const Z4Matrix &a) {
    if (!a.is_symmetric()) {
        throw std::invalid_argument("split: matrix is not symmetric");
    }
    const std::size_t n = a.size();
    BitMatrix hi_offdiag = a.high_plane();
    for (std::size_t i = 0; i < n; i++) {
        hi_offdiag.set(i, i, false);
    }
    for (std::size_t i = 0; i < n; i++) {
        if (!hi_offdiag.row_is_zero(i)) {
            throw NonClassicalForm("split: off-diagonal entry of 2 or 3 in row " + std::to_string(i));
        }
    }
    BitVector v(n);
    for (std::size_t i = 0; i < n; i++) {
        v.set(i, a.high_plane().get(i, i));
    }
    return {a.low_plane(), std::move(v)};
}

uint8_t evaluate(const QuadForm &f, const BitVector &x) {
    if (x.size() != f.n) {
        throw std::invalid_argument("evaluate: assignment length " + std::to_string(x.size()) +
                                    " does not match form size " + std::to_string(f.n));
    }
    // sum_i x_i |B_i & x| counts each diagonal hit once and each off-diagonal pair twice.
    std::size_t s = 0;
    for (std::size_t i = 0; i < f.n; i++) {
        if (x.get(i)) {
            s += and_popcount(f.b.row(i), x.words());
        }
    }
    s += 2 * and_popcount(x.words(), f.v.words());
    return static_cast<uint8_t>(s & 3);
}

NormalForm NormalForm::from_parts(FormKind kind, std::size_t n, std::size_t r, BitVector w) {
    if (w.size() != n || r > n) {
        throw std::invalid_argument("NormalForm: inconsistent sizes");
    }
    if (kind == FormKind::Alternating && r % 2 != 0) {
        throw std::invalid_argument("NormalForm: alternating forms have even rank");
    }
    NormalForm nf;
    nf.kind = kind;
    nf.n = n;
    nf.r = r;
    nf.g = kind == FormKind::Alternating ? r / 2 : 0;
    nf.w = std::move(w);
    nf.d_prime_diag.resize(n);
    for (std::size_t i = 0; i < n; i++) {
        nf.d_prime_diag[i] = static_cast<uint8_t>((nf.d_diag(i) + 2 * nf.w.get(i)) & 3);
    }

    for (std::size_t i = r; i < n; i++) {
        if (nf.w.get(i)) {
            nf.tail_cancels = true;
        } else {
            nf.c++;
        }
    }
    if (kind == FormKind::Alternating) {
        for (std::size_t j = 0; j < nf.g; j++) {
            if (nf.w.get(2 * j) && nf.w.get(2 * j + 1)) {
                nf.k++;
            }
        }
    } else {
        std::size_t threes = 0;
        for (std::size_t i = 0; i < r; i++) {
            threes += nf.w.get(i);
        }
        std::size_t ones = r - threes;
        nf.d = std::min(ones, threes);
        std::size_t m = nf.m();
        nf.a = m / 4;
        nf.b = m % 4;
        // Undefined without leftover coefficients; kept at 0.
        nf.eta = (m > 0 && threes > ones) ? 1 : 0;
    }
    return nf;
}

NormalForm NormalForm::with_w(BitVector new_w) const {
    return from_parts(kind, n, r, std::move(new_w));
}

Normalization normalize_with_basis(const Z4Matrix &a) {
    QuadForm f = split(a);
    const std::size_t n = f.n;

    Normalization out;
    out.decomposition = pldlt(f.b);
    const Pldlt &dec = out.decomposition;
    BitMatrix linv = lower_tri_inverse(dec.lower);

    // basis = L^-1 P^T: column perm[t] of the basis is column t of L^-1.
    out.basis = BitMatrix(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t t = 0; t < n; t++) {
            if (linv.get(i, t)) {
                out.basis.set(i, dec.perm[t]);
            }
        }
    }

    const FormKind kind = f.alternating() ? FormKind::Alternating : FormKind::NonAlternating;
    if (kind == FormKind::NonAlternating && dec.diag.count(BlockKind::Block2) > 0) {
        // For a unit vector u orthogonal to a hyperbolic pair (p, q):
        //   u+p+q, u+p, u+q are mutually orthogonal unit vectors.
        std::size_t unit = n;
        std::size_t pos = 0;
        std::vector<std::size_t> pairs;
        for (BlockKind blk : dec.diag.blocks) {
            if (blk == BlockKind::Unit1 && unit == n) {
                unit = pos;
            }
            if (blk == BlockKind::Block2) {
                pairs.push_back(pos);
            }
            pos += blk == BlockKind::Block2 ? 2 : 1;
        }
        if (unit == n) {
            throw std::logic_error("normalize: non-alternating decomposition without a 1x1 pivot");
        }
        for (std::size_t p : pairs) {
            out.basis.xor_row(unit, p);
            out.basis.xor_row(unit, p + 1);
            out.basis.xor_row(p, unit);
            out.basis.xor_row(p + 1, unit);
        }
    }
    out.d_prime = z4_congruence(out.basis, a);

    const std::size_t r = dec.diag.rank();
    BitVector w(n);
    for (std::size_t i = 0; i < n; i++) {
        uint8_t d_ii = (kind == FormKind::NonAlternating && i < r) ? 1 : 0;
        uint8_t dp = out.d_prime.get(i, i);
        if ((dp & 1) != d_ii) {
            throw std::logic_error("normalize: D' diagonal parity disagrees with D");
        }
        w.set(i, ((dp - d_ii) >> 1) & 1);
    }
    out.form = NormalForm::from_parts(kind, n, r, std::move(w));
    return out;
}

NormalForm normalize(const Z4Matrix &a) {
    return normalize_with_basis(a).form;
}

Z4Matrix read_z4(std::istream &in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(first, last - first + 1));
    }
    if (lines.empty()) {
        throw ParseError(".z4: missing header line");
    }
    std::istringstream header(lines[0]);
    long long n = -1;
    std::string extra;
    if (!(header >> n) || n < 0 || (header >> extra)) {
        throw ParseError(".z4: header must be a single count n");
    }
    if (lines.size() != static_cast<std::size_t>(n) + 1) {
        throw ParseError(".z4: expected " + std::to_string(n) + " matrix rows, got " +
                         std::to_string(lines.size() - 1));
    }
    Z4Matrix a(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < a.size(); i++) {
        const std::string &row = lines[i + 1];
        if (row.size() != a.size()) {
            throw ParseError(".z4: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                             " digits, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < a.size(); j++) {
            if (row[j] < '0' || row[j] > '3') {
                throw ParseError(".z4: digits must be in 0..3");
            }
            a.set(i, j, static_cast<uint8_t>(row[j] - '0'));
        }
    }
    if (!a.is_symmetric()) {
        throw ParseError(".z4: matrix is not symmetric");
    }
    return a;
}

Z4Matrix read_z4_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    return read_z4(in);
}

void write_z4(std::ostream &out, const Z4Matrix &a) {
    out << a.size() << "\n";
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < a.size(); j++) {
            out << static_cast<char>('0' + a.get(i, j));
        }
        out << "\n";
    }
}

}  // namespace stabrank
