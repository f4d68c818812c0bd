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

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace stabrank {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw ParseError("bit string may only contain '0' and '1': " + std::string(bits));
        }
    }
    return v;
}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](uint64_t w) { return w != 0; });
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    xor_words(words_, other.words_);
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("BitVector length mismatch");
    }
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != cols) {
            throw ParseError("ragged row " + std::to_string(i) + ": expected " + std::to_string(cols) +
                             " columns, got " + std::to_string(rows[i].size()));
        }
        for (std::size_t j = 0; j < cols; j++) {
            char c = rows[i][j];
            if (c == '1') {
                m.set(i, j);
            } else if (c != '0') {
                throw ParseError("row " + std::to_string(i) + " contains a character other than 0/1");
            }
        }
    }
    return m;
}

BitVector BitMatrix::row_vector(std::size_t i) const {
    BitVector v(cols_);
    std::copy(row(i).begin(), row(i).end(), v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t i, const BitVector &v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("set_row: length mismatch");
    }
    std::copy(v.words().begin(), v.words().end(), row(i).begin());
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    uint64_t *d = data_.data() + dst * stride_;
    const uint64_t *s = data_.data() + src * stride_;
    for (std::size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

bool BitMatrix::row_is_zero(std::size_t i) const {
    auto r = row(i);
    return std::all_of(r.begin(), r.end(), [](uint64_t w) { return w == 0; });
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; i++) {
        auto r = row(i);
        for (std::size_t k = 0; k < stride_; k++) {
            uint64_t w = r[k];
            while (w) {
                std::size_t j = (k << 6) + std::countr_zero(w);
                t.set(j, i);
                w &= w - 1;
            }
        }
    }
    return t;
}

bool BitMatrix::is_symmetric() const {
    return rows_ == cols_ && transposed() == *this;
}

bool BitMatrix::has_nonzero_diagonal() const {
    for (std::size_t i = 0; i < std::min(rows_, cols_); i++) {
        if (get(i, i)) {
            return true;
        }
    }
    return false;
}

BitVector BitMatrix::diagonal() const {
    BitVector d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); i++) {
        d.set(i, get(i, i));
    }
    return d;
}

bool BitMatrix::is_unit_lower_triangular() const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; i++) {
        if (!get(i, i)) {
            return false;
        }
        for (std::size_t j = i + 1; j < cols_; j++) {
            if (get(i, j)) {
                return false;
            }
        }
    }
    return true;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            s.push_back(get(i, j) ? '1' : '0');
        }
        s.push_back('\n');
    }
    return s;
}

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        auto out = c.row(i);
        auto ar = a.row(i);
        for (std::size_t k = 0; k < ar.size(); k++) {
            uint64_t w = ar[k];
            while (w) {
                std::size_t j = (k << 6) + std::countr_zero(w);
                xor_words(out, b.row(j));
                w &= w - 1;
            }
        }
    }
    return c;
}

BitVector mat_vec(const BitMatrix &a, const BitVector &x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("mat_vec: dimension mismatch");
    }
    BitVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); i++) {
        y.set(i, and_popcount(a.row(i), x.words()) & 1);
    }
    return y;
}

std::size_t rank(const BitMatrix &a) {
    BitMatrix m = a;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); col++) {
        std::size_t word = col >> 6;
        uint64_t mask = uint64_t{1} << (col & 63);
        std::size_t pivot = r;
        while (pivot < m.rows() && !(m.row(pivot)[word] & mask)) {
            pivot++;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(pivot, r);
        auto pr = m.row(r);
        for (std::size_t i = r + 1; i < m.rows(); i++) {
            auto ri = m.row(i);
            if (ri[word] & mask) {
                // Words left of `word` are already zero in both rows.
                for (std::size_t k = word; k < ri.size(); k++) {
                    ri[k] ^= pr[k];
                }
            }
        }
        r++;
    }
    return r;
}

std::size_t BlockDiag::dimension() const {
    std::size_t n = 0;
    for (BlockKind b : blocks) {
        n += b == BlockKind::Block2 ? 2 : 1;
    }
    return n;
}

std::size_t BlockDiag::rank() const {
    return count(BlockKind::Unit1) + 2 * count(BlockKind::Block2);
}

std::size_t BlockDiag::count(BlockKind kind) const {
    return static_cast<std::size_t>(std::count(blocks.begin(), blocks.end(), kind));
}

BitMatrix BlockDiag::expand() const {
    BitMatrix m(dimension(), dimension());
    std::size_t pos = 0;
    for (BlockKind b : blocks) {
        switch (b) {
            case BlockKind::Unit1:
                m.set(pos, pos);
                pos += 1;
                break;
            case BlockKind::Zero1:
                pos += 1;
                break;
            case BlockKind::Block2:
                m.set(pos, pos + 1);
                m.set(pos + 1, pos);
                pos += 2;
                break;
        }
    }
    return m;
}

BitMatrix Pldlt::permutation_matrix() const {
    BitMatrix p(perm.size(), perm.size());
    for (std::size_t t = 0; t < perm.size(); t++) {
        p.set(perm[t], t);
    }
    return p;
}

BitMatrix Pldlt::reconstruct() const {
    BitMatrix p = permutation_matrix();
    BitMatrix pl = mat_mul(p, lower);
    return mat_mul(mat_mul(pl, diag.expand()), pl.transposed());
}

Pldlt pldlt(const BitMatrix &b, PivotOrder order) {
    if (b.rows() != b.cols() || !b.is_symmetric()) {
        throw std::invalid_argument("pldlt: input matrix is not symmetric");
    }
    const std::size_t n = b.rows();

    // Rows of `work` that are still active hold the current Schur complement; their entries in
    // already-eliminated columns are zero. `lrows[q]` collects column positions of L for
    // original row q, which receives its own position only once it becomes a pivot.
    BitMatrix work = b;
    BitMatrix lrows(n, n);
    std::vector<char> active(n, 1);
    std::vector<std::size_t> scan;
    scan.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        scan.push_back(order == PivotOrder::LowestIndex ? i : n - 1 - i);
    }

    Pldlt out;
    out.perm.reserve(n);
    auto take = [&](std::size_t q) {
        active[q] = 0;
        out.perm.push_back(q);
    };

    while (out.perm.size() < n) {
        std::size_t k = out.perm.size();

        std::size_t unit = n;
        for (std::size_t q : scan) {
            if (active[q] && work.get(q, q)) {
                unit = q;
                break;
            }
        }
        if (unit != n) {
            const std::size_t p = unit;
            for (std::size_t q = 0; q < n; q++) {
                if (active[q] && q != p && work.get(q, p)) {
                    work.xor_row(q, p);
                    lrows.set(q, k);
                }
            }
            take(p);
            out.diag.blocks.push_back(BlockKind::Unit1);
            continue;
        }

        std::size_t pivot = n;
        for (std::size_t q : scan) {
            if (active[q] && !work.row_is_zero(q)) {
                pivot = q;
                break;
            }
        }
        if (pivot == n) {
            for (std::size_t q : scan) {
                if (active[q]) {
                    take(q);
                    out.diag.blocks.push_back(BlockKind::Zero1);
                }
            }
            break;
        }

        // 2x2 pivot on (pivot, partner). The partner is placed first, matching a row swap that
        // brings the pivot's off-diagonal 1 onto the leading diagonal position.
        std::size_t partner = n;
        auto pr = work.row(pivot);
        if (order == PivotOrder::LowestIndex) {
            for (std::size_t w = 0; w < pr.size() && partner == n; w++) {
                if (pr[w]) {
                    partner = (w << 6) + std::countr_zero(pr[w]);
                }
            }
        } else {
            for (std::size_t w = pr.size(); w-- > 0 && partner == n;) {
                if (pr[w]) {
                    partner = (w << 6) + 63 - std::countl_zero(pr[w]);
                }
            }
        }
        for (std::size_t q = 0; q < n; q++) {
            if (!active[q] || q == pivot || q == partner) {
                continue;
            }
            bool to_pivot = work.get(q, pivot);
            bool to_partner = work.get(q, partner);
            if (to_pivot) {
                work.xor_row(q, partner);
                lrows.set(q, k);
            }
            if (to_partner) {
                work.xor_row(q, pivot);
                lrows.set(q, k + 1);
            }
        }
        take(partner);
        take(pivot);
        out.diag.blocks.push_back(BlockKind::Block2);
    }

    out.lower = BitMatrix(n, n);
    for (std::size_t t = 0; t < n; t++) {
        std::copy(lrows.row(out.perm[t]).begin(), lrows.row(out.perm[t]).end(), out.lower.row(t).begin());
        out.lower.set(t, t);
    }
    return out;
}

BitMatrix lower_tri_inverse(const BitMatrix &l) {
    if (!l.is_unit_lower_triangular()) {
        throw std::invalid_argument("lower_tri_inverse: input is not unit lower triangular");
    }
    const std::size_t n = l.rows();
    // L X = I  =>  X_i = e_i + sum_{k<i} L_ik X_k.
    BitMatrix x(n, n);
    for (std::size_t i = 0; i < n; i++) {
        x.set(i, i);
        auto lr = l.row(i);
        auto xr = x.row(i);
        for (std::size_t w = 0; w < lr.size(); w++) {
            uint64_t bits = lr[w];
            while (bits) {
                std::size_t k = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                if (k < i) {
                    xor_words(xr, x.row(k));
                }
            }
        }
    }
    return x;
}

namespace {

bool next_content_line(std::istream &in, std::string &line) {
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        return true;
    }
    return false;
}

}  // namespace

BitMatrix read_f2(std::istream &in) {
    std::string line;
    if (!next_content_line(in, line)) {
        throw ParseError(".f2: missing header line");
    }
    std::istringstream header(line);
    long long rows = -1, cols = -1;
    std::string extra;
    if (!(header >> rows >> cols) || rows < 0 || cols < 0 || (header >> extra)) {
        throw ParseError(".f2: header must be 'n_rows n_cols'");
    }
    std::vector<std::string> body;
    for (long long i = 0; i < rows; i++) {
        if (cols == 0) {
            body.emplace_back();
            continue;
        }
        if (!next_content_line(in, line)) {
            throw ParseError(".f2: expected " + std::to_string(rows) + " rows, got " + std::to_string(i));
        }
        if (line.size() != static_cast<std::size_t>(cols)) {
            throw ParseError(".f2: ragged row " + std::to_string(i));
        }
        body.push_back(line);
    }
    if (next_content_line(in, line)) {
        throw ParseError(".f2: trailing content after " + std::to_string(rows) + " rows");
    }
    BitMatrix m = BitMatrix::from_rows(body);
    if (rows > 0 && cols == 0) {
        return BitMatrix(static_cast<std::size_t>(rows), 0);
    }
    return m;
}

BitMatrix read_f2_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    return read_f2(in);
}

void write_f2(std::ostream &out, const BitMatrix &m) {
    out << m.rows() << " " << m.cols() << "\n" << m.to_string();
}

}  // namespace stabrank
