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

#ifndef STABRANK_SIMULATE_HPP
#define STABRANK_SIMULATE_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabrank/circuit.hpp"
#include "stabrank/count.hpp"
#include "stabrank/phase_polynomial.hpp"
#include "stabrank/z4form.hpp"

namespace stabrank {

/// A documented promise on the input does not hold (e.g. a zero probability where a rank is
/// expected). The CLI maps it to exit code 2.
class PromiseViolation : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// (re + i im) / 2^(half_divisor_exp / 2), exact.
struct DyadicAmplitude {
    SignedPow2 re;
    SignedPow2 im;
    int64_t half_divisor_exp = 0;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::complex<double> to_complex() const;
    /// "0", "[-]2^a/2^(h/2)", "[-]i*2^b/2^(h/2)" or "([-]2^a[+-]i*2^b)/2^(h/2)"; the divisor is
    /// omitted when h is 0.
    std::string to_string() const;
    /// Equality of values, not of representations.
    bool operator==(const DyadicAmplitude &other) const;
};

/// 0 or 2^log2.
struct Probability {
    bool is_zero = true;
    int64_t log2 = 0;

    static Probability zero() { return {}; }
    static Probability pow2(int64_t e) { return {false, e}; }

    double to_double() const;
    /// "0", "1" or "2^k".
    std::string to_string() const;
    bool operator==(const Probability &other) const = default;
};

/// |a|^2; throws std::logic_error if it is not 0 or a power of two.
Probability squared_magnitude(const DyadicAmplitude &a);

/// i^phase * (a0 of the normal form) / 2^(half_divisor_exp/2).
DyadicAmplitude amplitude_from_form(const ReducedForm &r);

/// <z|C|x>. Throws std::invalid_argument when C contains a CS gate.
DyadicAmplitude amplitude(const Circuit &c, const BitVector &x, const BitVector &z);

/// Pr[C(x) = z], computed through the self-dual form q + q* and its alternating reduction.
Probability probability(const Circuit &c, const BitVector &x, const BitVector &z);

/// A classical form whose variables are paired by a fixed-point-free involution so that every
/// term is matched by its negation on the partner variables.
struct SelfDualForm {
    QuadForm form;
    std::vector<std::size_t> partner;

    /// f(v) + (-f)(v') on 2n variables, with v_i paired to v'_i = variable n + i.
    static SelfDualForm from_form(const QuadForm &f);
    /// Throws std::invalid_argument unless the pairing is an involution without fixed points
    /// and the terms match up.
    void validate() const;
};

struct AlternatingReduction {
    /// Alternating form on the kept variables.
    QuadForm form;
    /// kept[i] is the self-dual variable behind form variable i.
    std::vector<std::size_t> kept;
    /// The substituted variable, equal on the subspace to the xor of `sum_of`.
    std::optional<std::size_t> eliminated;
    std::vector<std::size_t> sum_of;
};

/// Replaces the odd terms by an xor-clique and eliminates one variable, so that the result agrees
/// pointwise with f on the subspace where the odd terms vanish mod 4.
AlternatingReduction self_dual_to_alternating(const SelfDualForm &f);

/// Bipartite graph on rows then columns, edge (i, rows + j) iff a0[i][j] = 1.
Graph rank_to_graph(const BitMatrix &a0);

/// r with p = 2^(-2r). Throws PromiseViolation for p = 0, an odd exponent, or r > n_nodes / 2.
std::size_t rank_from_probability(const Probability &p, std::size_t n_nodes);

/// rank_to_graph, graph_to_circuit, probability at 0 -> 0, rank_from_probability.
std::size_t rank_via_simulation(const BitMatrix &a0);

/// One amplitude per output, sharing a single normalization across all of them.
std::vector<DyadicAmplitude> amplitudes_for_outputs(const Circuit &c, const BitVector &x,
                                                    const std::vector<BitVector> &outputs);

}  // namespace stabrank

#endif
