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

#ifndef STABRANK_COUNT_HPP
#define STABRANK_COUNT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stabrank/z4form.hpp"

namespace stabrank {

/// sign * 2^exp with sign in {-1, 0, +1}. Zero is always stored as (0, 0).
struct SignedPow2 {
    int sign = 0;
    int64_t exp = 0;

    static SignedPow2 zero() { return {}; }
    static SignedPow2 pow2(int64_t e, int s = 1) { return s == 0 ? SignedPow2{} : SignedPow2{s < 0 ? -1 : 1, e}; }

    bool is_zero() const { return sign == 0; }
    SignedPow2 operator-() const { return {-sign, exp}; }
    SignedPow2 shifted(int64_t by) const { return sign == 0 ? SignedPow2{} : SignedPow2{sign, exp + by}; }
    double to_double() const;
    /// Exact value; throws std::overflow_error unless it fits in an int64.
    int64_t to_int64() const;
    /// "0", "2^k" or "-2^k".
    std::string to_string() const;

    bool operator==(const SignedPow2 &other) const = default;
};

/// (N0 - N2, N1 - N3) for a form in n variables.
struct Distribution {
    SignedPow2 d0;
    SignedPow2 d1;
    std::size_t n = 0;

    bool operator==(const Distribution &other) const = default;
};

/// f(x) = sum_i coeffs[i] x_i over x in {0,1}^n, coefficients taken mod 4.
Distribution count_linear(const std::vector<uint8_t> &coeffs);

/// Throws std::invalid_argument unless nf is alternating.
Distribution count_alternating(const NormalForm &nf);

/// Throws std::invalid_argument unless nf is non-alternating.
Distribution count_nonalternating(const NormalForm &nf);

/// a0 = (N0 - N2) + i (N1 - N3), dispatched on the kind of nf.
Distribution exponential_sum(const NormalForm &nf);

/// exponential_sum(normalize(a)).
Distribution count_form(const Z4Matrix &a);

}  // namespace stabrank

#endif
