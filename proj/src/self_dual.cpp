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
#include <stdexcept>

#include "stabrank/simulate.hpp"

namespace stabrank {

namespace {

uint8_t diag_coeff(const QuadForm &f, std::size_t i) {
    return static_cast<uint8_t>(f.b.get(i, i) + 2 * f.v.get(i));
}

}  // namespace

SelfDualForm SelfDualForm::from_form(const QuadForm &f) {
    const std::size_t n = f.n;
    BitMatrix b(2 * n, 2 * n);
    BitVector v(2 * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            if (f.b.get(i, j)) {
                b.set(i, j);
                b.set(n + i, n + j);
            }
        }
        // a -> -a mod 4 keeps the parity and flips the high bit exactly when a is odd.
        v.set(i, f.v.get(i));
        v.set(n + i, f.v.get(i) != f.b.get(i, i));
    }
    SelfDualForm out{QuadForm(std::move(b), std::move(v)), std::vector<std::size_t>(2 * n)};
    for (std::size_t i = 0; i < n; i++) {
        out.partner[i] = n + i;
        out.partner[n + i] = i;
    }
    return out;
}

void SelfDualForm::validate() const {
    const std::size_t n = form.n;
    if (partner.size() != n) {
        throw std::invalid_argument("SelfDualForm: pairing must cover every variable");
    }
    for (std::size_t i = 0; i < n; i++) {
        if (partner[i] >= n || partner[partner[i]] != i || partner[i] == i) {
            throw std::invalid_argument("SelfDualForm: pairing is not a fixed-point-free involution");
        }
        if (((diag_coeff(form, i) + diag_coeff(form, partner[i])) & 3) != 0) {
            throw std::invalid_argument("SelfDualForm: square term of variable " + std::to_string(i) +
                                        " is not negated on its partner");
        }
        for (std::size_t j = i + 1; j < n; j++) {
            if (!form.b.get(i, j)) {
                continue;
            }
            // Classical cross terms are 2 v_i v_j, which is its own negation.
            if (!form.b.get(partner[i], partner[j])) {
                throw std::invalid_argument("SelfDualForm: cross term " + std::to_string(i) + "," + std::to_string(j) +
                                            " has no partner term");
            }
            if (partner[i] == j) {
                throw std::invalid_argument("SelfDualForm: cross term fixed by the pairing");
            }
        }
    }
}

AlternatingReduction self_dual_to_alternating(const SelfDualForm &f) {
    f.validate();
    const std::size_t n = f.form.n;
    BitMatrix b = f.form.b;
    BitVector v = f.form.v;

    // T collects u (u < partner) carrying an odd pair u + 3u' (T0) or 3u + u' (T1).
    std::vector<std::size_t> t;
    std::vector<bool> in_t1;
    for (std::size_t u = 0; u < n; u++) {
        if (u < f.partner[u] && b.get(u, u)) {
            t.push_back(u);
            in_t1.push_back(diag_coeff(f.form, u) == 3);
        }
    }
    // Drop the odd terms.
    for (std::size_t u : t) {
        for (std::size_t x : {u, f.partner[u]}) {
            b.set(x, x, false);
            v.set(x, false);
        }
    }
    // Xor-clique: same side 2uv + 2u'v', opposite sides 2uv' + 2u'v.
    for (std::size_t p = 0; p < t.size(); p++) {
        for (std::size_t q = p + 1; q < t.size(); q++) {
            std::size_t u = t[p];
            std::size_t w = t[q];
            std::size_t a = in_t1[p] == in_t1[q] ? w : f.partner[w];
            std::size_t a_partner = f.partner[a];
            b.flip(u, a);
            b.flip(a, u);
            b.flip(f.partner[u], a_partner);
            b.flip(a_partner, f.partner[u]);
        }
    }

    AlternatingReduction out;
    if (t.empty()) {
        out.form = QuadForm(std::move(b), std::move(v));
        out.kept.resize(n);
        for (std::size_t i = 0; i < n; i++) {
            out.kept[i] = i;
        }
        return out;
    }

    // On the subspace, 2e = 2 (sum of the other members of T and T'). All coefficients are now
    // even, so the form is 2 G(x) with G over F2 and the substitution can be done in G.
    const std::size_t e = t.back();
    for (std::size_t u : t) {
        if (u != e) {
            out.sum_of.push_back(u);
        }
        out.sum_of.push_back(f.partner[u]);
    }
    std::sort(out.sum_of.begin(), out.sum_of.end());
    out.eliminated = e;

    for (std::size_t j = 0; j < n; j++) {
        if (j == e || !b.get(e, j)) {
            continue;
        }
        for (std::size_t r : out.sum_of) {
            if (r == j) {
                v.flip(j);
            } else {
                b.flip(r, j);
                b.flip(j, r);
            }
        }
    }
    if (v.get(e)) {
        for (std::size_t r : out.sum_of) {
            v.flip(r);
        }
    }

    for (std::size_t i = 0; i < n; i++) {
        if (i != e) {
            out.kept.push_back(i);
        }
    }
    BitMatrix kb(n - 1, n - 1);
    BitVector kv(n - 1);
    for (std::size_t i = 0; i < n - 1; i++) {
        kv.set(i, v.get(out.kept[i]));
        for (std::size_t j = 0; j < n - 1; j++) {
            if (b.get(out.kept[i], out.kept[j])) {
                kb.set(i, j);
            }
        }
    }
    out.form = QuadForm(std::move(kb), std::move(kv));
    return out;
}

}  // namespace stabrank
