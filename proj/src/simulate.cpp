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

#include "stabrank/simulate.hpp"

#include <algorithm>
#include <cmath>

namespace stabrank {

namespace {

// a / 2^(ha/2) == b / 2^(hb/2) for signed powers of two.
bool same_part(const SignedPow2 &a, int64_t ha, const SignedPow2 &b, int64_t hb) {
    if (a.sign != b.sign) {
        return false;
    }
    return a.sign == 0 || 2 * a.exp - ha == 2 * b.exp - hb;
}

std::string divisor_suffix(int64_t h) {
    if (h == 0) {
        return "";
    }
    return "/2^(" + std::to_string(h) + "/2)";
}

// (re + i im) * i^k.
void rotate(SignedPow2 &re, SignedPow2 &im, uint8_t k) {
    for (uint8_t t = 0; t < (k & 3); t++) {
        SignedPow2 old_re = re;
        re = -im;
        im = old_re;
    }
}

}  // namespace

std::complex<double> DyadicAmplitude::to_complex() const {
    double scale = std::ldexp(1.0, -static_cast<int>(half_divisor_exp / 2));
    if (half_divisor_exp % 2 != 0) {
        scale *= half_divisor_exp > 0 ? std::sqrt(0.5) : std::sqrt(2.0);
    }
    return {re.to_double() * scale, im.to_double() * scale};
}

std::string DyadicAmplitude::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string suffix = divisor_suffix(half_divisor_exp);
    if (im.is_zero()) {
        return re.to_string() + suffix;
    }
    std::string imag = (im.sign < 0 ? "-i*2^" : "i*2^") + std::to_string(im.exp);
    if (re.is_zero()) {
        return imag + suffix;
    }
    std::string joined = re.to_string() + (im.sign < 0 ? "" : "+") + imag;
    return suffix.empty() ? joined : "(" + joined + ")" + suffix;
}

bool DyadicAmplitude::operator==(const DyadicAmplitude &other) const {
    return same_part(re, half_divisor_exp, other.re, other.half_divisor_exp) &&
           same_part(im, half_divisor_exp, other.im, other.half_divisor_exp);
}

double Probability::to_double() const {
    return is_zero ? 0.0 : std::ldexp(1.0, static_cast<int>(log2));
}

std::string Probability::to_string() const {
    if (is_zero) {
        return "0";
    }
    if (log2 == 0) {
        return "1";
    }
    return "2^" + std::to_string(log2);
}

Probability squared_magnitude(const DyadicAmplitude &a) {
    if (a.is_zero()) {
        return Probability::zero();
    }
    int64_t e;
    if (a.re.is_zero()) {
        e = 2 * a.im.exp;
    } else if (a.im.is_zero()) {
        e = 2 * a.re.exp;
    } else if (a.re.exp == a.im.exp) {
        e = 2 * a.re.exp + 1;
    } else {
        throw std::logic_error("squared_magnitude: not a power of two");
    }
    return Probability::pow2(e - a.half_divisor_exp);
}

DyadicAmplitude amplitude_from_form(const ReducedForm &r) {
    DyadicAmplitude out;
    out.half_divisor_exp = r.half_divisor_exp;
    if (r.infeasible) {
        return out;
    }
    Distribution a0 = exponential_sum(normalize(r.form.to_z4()));
    out.re = a0.d0;
    out.im = a0.d1;
    rotate(out.re, out.im, r.phase);
    return out;
}

DyadicAmplitude amplitude(const Circuit &c, const BitVector &x, const BitVector &z) {
    if (!c.is_stabilizer()) {
        throw std::invalid_argument("amplitude: circuit contains a CS gate");
    }
    return amplitude_from_form(reduce_to_form(build_phase_polynomial(c, x, z, OutputMode::Fixed)));
}

Probability probability(const Circuit &c, const BitVector &x, const BitVector &z) {
    if (!c.is_stabilizer()) {
        throw std::invalid_argument("probability: circuit contains a CS gate");
    }
    ReducedForm r = reduce_to_form(build_phase_polynomial(c, x, z, OutputMode::Fixed));
    if (r.infeasible) {
        return Probability::zero();
    }
    // |sum_y i^q(y)|^2 = sum_{y,y'} i^(q(y) - q(y')), whose imaginary part cancels.
    AlternatingReduction alt = self_dual_to_alternating(SelfDualForm::from_form(r.form));
    Distribution a0 = count_alternating(normalize(alt.form.to_z4()));
    if (a0.d0.is_zero()) {
        return Probability::zero();
    }
    if (a0.d0.sign < 0 || !a0.d1.is_zero()) {
        throw std::logic_error("probability: self-dual sum is not a nonnegative real");
    }
    return Probability::pow2(a0.d0.exp - r.half_divisor_exp);
}

Graph rank_to_graph(const BitMatrix &a0) {
    Graph g(a0.rows() + a0.cols());
    for (std::size_t i = 0; i < a0.rows(); i++) {
        for (std::size_t j = 0; j < a0.cols(); j++) {
            if (a0.get(i, j)) {
                g.toggle_edge(i, a0.rows() + j);
            }
        }
    }
    return g;
}

std::size_t rank_from_probability(const Probability &p, std::size_t n_nodes) {
    if (p.is_zero) {
        throw PromiseViolation("rank_from_probability: probability is 0");
    }
    if (p.log2 > 0 || p.log2 % 2 != 0) {
        throw PromiseViolation("rank_from_probability: " + p.to_string() + " is not an even power 2^(-2r)");
    }
    auto r = static_cast<std::size_t>(-p.log2 / 2);
    if (2 * r > n_nodes) {
        throw PromiseViolation("rank_from_probability: rank " + std::to_string(r) + " exceeds " +
                               std::to_string(n_nodes) + "/2");
    }
    return r;
}

std::size_t rank_via_simulation(const BitMatrix &a0) {
    Graph g = rank_to_graph(a0);
    Circuit c = graph_to_circuit(g);
    BitVector zero(g.num_nodes());
    return rank_from_probability(probability(c, zero, zero), g.num_nodes());
}

std::vector<DyadicAmplitude> amplitudes_for_outputs(const Circuit &c, const BitVector &x,
                                                    const std::vector<BitVector> &outputs) {
    if (!c.is_stabilizer()) {
        throw std::invalid_argument("amplitudes_for_outputs: circuit contains a CS gate");
    }
    // Every output line carries 2 w_j (annotation_j + z_j); z only changes the linear
    // coefficients of the w_j, so the F2 part and its normalization are shared.
    PhasePolynomial q = build_phase_polynomial(c, x, std::nullopt, OutputMode::Slack);
    ReducedForm base = reduce_to_form(q);
    Normalization norm = normalize_with_basis(base.form.to_z4());

    std::vector<std::size_t> slack_index(q.output_slacks.size());
    for (std::size_t j = 0; j < slack_index.size(); j++) {
        auto it = std::lower_bound(base.vars.begin(), base.vars.end(), q.output_slacks[j]);
        slack_index[j] = static_cast<std::size_t>(it - base.vars.begin());
    }
    // With x = basis^T y, the term 2 x.e_k becomes 2 y.(column k of basis).
    BitMatrix columns = norm.basis.transposed();

    std::vector<DyadicAmplitude> out;
    out.reserve(outputs.size());
    for (const BitVector &z : outputs) {
        if (z.size() != c.num_qubits()) {
            throw std::invalid_argument("amplitudes_for_outputs: output length mismatch");
        }
        BitVector w = norm.form.w;
        for (std::size_t j = 0; j < z.size(); j++) {
            if (z.get(j)) {
                xor_words(w.words(), columns.row(slack_index[j]));
            }
        }
        Distribution a0 = exponential_sum(norm.form.with_w(std::move(w)));
        DyadicAmplitude amp;
        amp.half_divisor_exp = base.half_divisor_exp;
        amp.re = a0.d0;
        amp.im = a0.d1;
        rotate(amp.re, amp.im, base.phase);
        out.push_back(amp);
    }
    return out;
}

}  // namespace stabrank
