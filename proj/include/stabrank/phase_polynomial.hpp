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

#ifndef STABRANK_PHASE_POLYNOMIAL_HPP
#define STABRANK_PHASE_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "stabrank/circuit.hpp"
#include "stabrank/z4form.hpp"

namespace stabrank {

enum class VarKind : uint8_t {
    Input,     // x_i, only when the input is left symbolic
    Output,    // z_j, only in OutputMode::Symbolic
    Hadamard,  // y_k, one per H gate
    Slack,     // w_m, ties a non-atomic output annotation to its output value
};

struct VarInfo {
    VarKind kind;
    uint32_t line;  // qubit the variable belongs to
};

/// Current value of a qubit line: constant XOR (xor of vars). vars is sorted.
struct Annotation {
    bool constant = false;
    std::vector<uint32_t> vars;
};

enum class OutputMode : uint8_t {
    /// Outputs are given bits. Atomic annotations force their variable; others get a slack.
    Fixed,
    /// Outputs are variables z_j. A bare Hadamard variable is reused as z_j when possible.
    Symbolic,
    /// Every line gets a slack w_j carrying 2 w_j (annotation); the output enters later as 2 w_j z_j.
    Slack,
};

/// Polynomial over Z4 in 0/1 variables: amplitude = i^q summed over free variables, divided by
/// 2^(half_divisor_exp / 2). Monomials are multilinear since v^2 = v on bits.
class PhasePolynomial {
   public:
    uint32_t add_var(VarKind kind, uint32_t line);
    const std::vector<VarInfo> &vars() const { return vars_; }
    std::size_t num_vars() const { return vars_.size(); }

    void add_constant(uint8_t c) { constant_ = static_cast<uint8_t>((constant_ + c) & 3); }
    void add_linear(uint32_t v, uint8_t c) { linear_[v] = static_cast<uint8_t>((linear_[v] + c) & 3); }
    void add_pair(uint32_t u, uint32_t v, uint8_t c);
    /// Any multilinear monomial; `vars` need not be sorted and may repeat.
    void add_monomial(std::vector<uint32_t> vars, uint8_t c);

    uint8_t constant() const { return constant_; }
    const std::vector<uint8_t> &linear() const { return linear_; }
    const std::unordered_map<uint64_t, uint8_t> &pairs() const { return pairs_; }
    const std::map<std::vector<uint32_t>, uint8_t> &higher() const { return higher_; }
    static uint64_t pair_key(uint32_t u, uint32_t v) {
        return u < v ? (uint64_t{u} << 32) | v : (uint64_t{v} << 32) | u;
    }

    /// Restricts the sum to assignments with v = bit.
    void fix(uint32_t v, bool bit);
    std::optional<bool> fixed_value(uint32_t v) const {
        return fixed_[v] < 0 ? std::nullopt : std::optional<bool>(fixed_[v] == 1);
    }
    std::vector<uint32_t> free_vars() const;

    int64_t half_divisor_exp = 0;
    /// Set when some output constraint can never hold; the amplitude is then 0.
    bool infeasible = false;

    /// Per-line annotations after the last gate.
    std::vector<Annotation> annotations;
    /// OutputMode::Symbolic: the variable standing for z_j.
    std::vector<uint32_t> output_vars;
    /// OutputMode::Slack: the slack variable of line j.
    std::vector<uint32_t> output_slacks;
    /// Symbolic input: the variable standing for x_i.
    std::vector<uint32_t> input_vars;

    /// True when, after substituting fixed variables, every cross term has an even coefficient
    /// and nothing of degree 3 or more survives.
    bool is_classical() const;

    /// Fixes output values: fixes z_j in Symbolic mode, adds 2 w_j z_j in Slack mode.
    PhasePolynomial with_outputs(const BitVector &z) const;
    /// Fixes symbolic input values.
    PhasePolynomial with_inputs(const BitVector &x) const;

   private:
    std::vector<VarInfo> vars_;
    uint8_t constant_ = 0;
    std::vector<uint8_t> linear_;
    std::vector<int8_t> fixed_;
    std::unordered_map<uint64_t, uint8_t> pairs_;
    std::map<std::vector<uint32_t>, uint8_t> higher_;
};

/// Gate-by-gate construction. x == nullopt leaves inputs symbolic. z must be given exactly when
/// mode == Fixed. The global phase of Y = iXZ is kept in the constant term.
PhasePolynomial build_phase_polynomial(const Circuit &c, const std::optional<BitVector> &x,
                                       const std::optional<BitVector> &z, OutputMode mode = OutputMode::Fixed);

/// A polynomial with all fixed variables substituted, as a classical form on its free variables.
struct ReducedForm {
    QuadForm form;
    /// vars[i] is the polynomial variable behind form variable i.
    std::vector<uint32_t> vars;
    uint8_t phase = 0;
    int64_t half_divisor_exp = 0;
    bool infeasible = false;
};

/// Throws NonClassicalForm when the polynomial is not classical.
ReducedForm reduce_to_form(const PhasePolynomial &q);

struct GraphStateReduction {
    Graph graph;
    ReducedForm reduced;
};

/// <z|C|x> = i^phase * 2^(nodes - half_divisor_exp/2) * <0|C_G|0> where C_G = graph_to_circuit(graph).
/// Throws std::invalid_argument when C contains a CS gate.
GraphStateReduction to_graph_state(const Circuit &c, const BitVector &x, const BitVector &z);

}  // namespace stabrank

#endif
