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

#include "stabrank/count.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stabrank {

double SignedPow2::to_double() const {
    return sign == 0 ? 0.0 : sign * std::ldexp(1.0, static_cast<int>(exp));
}

int64_t SignedPow2::to_int64() const {
    if (sign == 0) {
        return 0;
    }
    if (exp < 0 || exp > 62) {
        throw std::overflow_error("SignedPow2: 2^" + std::to_string(exp) + " is not an int64");
    }
    return sign * (int64_t{1} << exp);
}

std::string SignedPow2::to_string() const {
    if (sign == 0) {
        return "0";
    }
    return (sign < 0 ? "-2^" : "2^") + std::to_string(exp);
}

namespace {

// (1 + i)^m = (-4)^a (1 + i)^b with m = 4a + b, scaled by 2^base. `negate_im` conjugates,
// which turns it into (1 - i)^m.
Distribution one_plus_i_power(std::size_t m, int64_t base, bool negate_im, std::size_t n) {
    const int64_t a = static_cast<int64_t>(m / 4);
    const int s = (a % 2 == 0) ? 1 : -1;
    const int t = negate_im ? -s : s;
    const int64_t e = base + 2 * a;
    Distribution out;
    out.n = n;
    switch (m % 4) {
        case 0:
            out.d0 = SignedPow2::pow2(e, s);
            break;
        case 1:
            out.d0 = SignedPow2::pow2(e, s);
            out.d1 = SignedPow2::pow2(e, t);
            break;
        case 2:
            out.d1 = SignedPow2::pow2(e + 1, t);
            break;
        default:
            out.d0 = SignedPow2::pow2(e + 1, -s);
            out.d1 = SignedPow2::pow2(e + 1, t);
            break;
    }
    return out;
}

}  // namespace

Distribution count_linear(const std::vector<uint8_t> &coeffs) {
    std::size_t zeros = 0;
    std::size_t ones = 0;
    std::size_t threes = 0;
    for (uint8_t c : coeffs) {
        switch (c & 3) {
            case 0:
                zeros++;
                break;
            case 1:
                ones++;
                break;
            case 2:
                // This variable alone contributes 1 + i^2 = 0.
                return {SignedPow2::zero(), SignedPow2::zero(), coeffs.size()};
            default:
                threes++;
                break;
        }
    }
    // A zero coefficient contributes 2; a (1, 3) pair contributes 1 + i + i^3 + i^4 = 2.
    std::size_t pairs = std::min(ones, threes);
    std::size_t m = ones + threes - 2 * pairs;
    return one_plus_i_power(m, static_cast<int64_t>(zeros + pairs), threes > ones, coeffs.size());
}

Distribution count_alternating(const NormalForm &nf) {
    if (nf.kind != FormKind::Alternating) {
        throw std::invalid_argument("count_alternating: form is non-alternating");
    }
    Distribution out;
    out.n = nf.n;
    if (nf.tail_cancels) {
        return out;
    }
    // Each block 2y0y1 + 2(w0 y0 + w1 y1) sums to 2(-1)^{w0 w1}; each tail variable to 2.
    out.d0 = SignedPow2::pow2(static_cast<int64_t>(nf.n - nf.g), nf.k % 2 == 0 ? 1 : -1);
    return out;
}

Distribution count_nonalternating(const NormalForm &nf) {
    if (nf.kind != FormKind::NonAlternating) {
        throw std::invalid_argument("count_nonalternating: form is alternating");
    }
    if (nf.tail_cancels) {
        return {SignedPow2::zero(), SignedPow2::zero(), nf.n};
    }
    // The tail contributes 2^c, matched (1, 3) pairs 2^d, and the leftover m coefficients
    // (1 +/- i)^m.
    return one_plus_i_power(nf.m(), static_cast<int64_t>(nf.c + nf.d), nf.eta == 1, nf.n);
}

Distribution exponential_sum(const NormalForm &nf) {
    return nf.kind == FormKind::Alternating ? count_alternating(nf) : count_nonalternating(nf);
}

Distribution count_form(const Z4Matrix &a) {
    return exponential_sum(normalize(a));
}

}  // namespace stabrank
