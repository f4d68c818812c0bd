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

#include "stabrank/phase_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace stabrank {

namespace {

using Monomial = std::vector<uint32_t>;

// Z4 polynomial equal to c XOR (xor of vars) on bits:
//   xor(S) = sum_s s + 2 sum_{s<t} s t,  1 - xor(S) = 1 + 3 sum_s s + 2 sum_{s<t} s t.
std::vector<std::pair<Monomial, uint8_t>> lift(const Annotation &a) {
    std::vector<std::pair<Monomial, uint8_t>> out;
    if (a.constant) {
        out.push_back({{}, 1});
    }
    for (std::size_t i = 0; i < a.vars.size(); i++) {
        out.push_back({{a.vars[i]}, static_cast<uint8_t>(a.constant ? 3 : 1)});
        for (std::size_t j = i + 1; j < a.vars.size(); j++) {
            out.push_back({{a.vars[i], a.vars[j]}, 2});
        }
    }
    return out;
}

std::vector<uint32_t> symmetric_difference(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    std::vector<uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class Builder {
   public:
    Builder(const Circuit &c, const std::optional<BitVector> &x) : n_(c.num_qubits()) {
        if (x && x->size() != n_) {
            throw std::invalid_argument("build_phase_polynomial: input has " + std::to_string(x->size()) +
                                        " bits for a " + std::to_string(n_) + "-qubit circuit");
        }
        q_.annotations.resize(n_);
        for (uint32_t i = 0; i < n_; i++) {
            if (x) {
                q_.annotations[i].constant = x->get(i);
            } else {
                uint32_t v = q_.add_var(VarKind::Input, i);
                q_.input_vars.push_back(v);
                q_.annotations[i].vars = {v};
            }
        }
    }

    void apply(const Gate &g) {
        Annotation &a = q_.annotations[g.q0];
        switch (g.kind) {
            case GateKind::H: {
                uint32_t y = q_.add_var(VarKind::Hadamard, g.q0);
                // q += 2 (c + sum S) y
                if (a.constant) {
                    q_.add_linear(y, 2);
                }
                for (uint32_t s : a.vars) {
                    q_.add_pair(s, y, 2);
                }
                a.constant = false;
                a.vars = {y};
                q_.half_divisor_exp++;
                break;
            }
            case GateKind::S:
                add_lift(a, 1);
                break;
            case GateKind::Sdg:
                add_lift(a, 3);
                break;
            case GateKind::Z:
                apply_z(a);
                break;
            case GateKind::X:
                a.constant = !a.constant;
                break;
            case GateKind::Y:
                // Y = i X Z.
                apply_z(a);
                a.constant = !a.constant;
                q_.add_constant(1);
                break;
            case GateKind::CZ:
                apply_cz(a, q_.annotations[g.q1]);
                break;
            case GateKind::CNOT: {
                Annotation &t = q_.annotations[g.q1];
                t.vars = symmetric_difference(t.vars, a.vars);
                t.constant = t.constant != a.constant;
                break;
            }
            case GateKind::CS:
                for (const auto &[m0, c0] : lift(a)) {
                    for (const auto &[m1, c1] : lift(q_.annotations[g.q1])) {
                        Monomial m = m0;
                        m.insert(m.end(), m1.begin(), m1.end());
                        q_.add_monomial(std::move(m), static_cast<uint8_t>(c0 * c1));
                    }
                }
                break;
        }
    }

    void finish(const std::optional<BitVector> &z, OutputMode mode) {
        if ((mode == OutputMode::Fixed) != z.has_value()) {
            throw std::invalid_argument("build_phase_polynomial: outputs must be given exactly in Fixed mode");
        }
        if (z && z->size() != n_) {
            throw std::invalid_argument("build_phase_polynomial: output has " + std::to_string(z->size()) +
                                        " bits for a " + std::to_string(n_) + "-qubit circuit");
        }
        std::vector<bool> aliased(q_.num_vars(), false);
        for (uint32_t j = 0; j < n_; j++) {
            const Annotation &a = q_.annotations[j];
            switch (mode) {
                case OutputMode::Fixed:
                    finish_fixed(j, a, z->get(j));
                    break;
                case OutputMode::Symbolic:
                    if (!a.constant && a.vars.size() == 1 && q_.vars()[a.vars[0]].kind == VarKind::Hadamard &&
                        !aliased[a.vars[0]]) {
                        aliased[a.vars[0]] = true;
                        q_.output_vars.push_back(a.vars[0]);
                    } else {
                        uint32_t zj = q_.add_var(VarKind::Output, j);
                        uint32_t w = add_slack(j, a);
                        q_.add_pair(w, zj, 2);
                        q_.output_vars.push_back(zj);
                    }
                    break;
                case OutputMode::Slack:
                    q_.output_slacks.push_back(add_slack(j, a));
                    break;
            }
        }
    }

    PhasePolynomial take() { return std::move(q_); }

   private:
    void add_lift(const Annotation &a, uint8_t scale) {
        for (const auto &[m, c] : lift(a)) {
            uint8_t v = static_cast<uint8_t>((c * scale) & 3);
            switch (m.size()) {
                case 0:
                    q_.add_constant(v);
                    break;
                case 1:
                    q_.add_linear(m[0], v);
                    break;
                default:
                    q_.add_pair(m[0], m[1], v);
                    break;
            }
        }
    }

    void apply_z(const Annotation &a) {
        if (a.constant) {
            q_.add_constant(2);
        }
        for (uint32_t s : a.vars) {
            q_.add_linear(s, 2);
        }
    }

    // q += 2 (c_i + sum S_i)(c_j + sum S_j); only parities matter under the factor 2.
    void apply_cz(const Annotation &a, const Annotation &b) {
        if (a.constant && b.constant) {
            q_.add_constant(2);
        }
        if (a.constant) {
            for (uint32_t t : b.vars) {
                q_.add_linear(t, 2);
            }
        }
        if (b.constant) {
            for (uint32_t s : a.vars) {
                q_.add_linear(s, 2);
            }
        }
        for (uint32_t s : a.vars) {
            for (uint32_t t : b.vars) {
                if (s == t) {
                    q_.add_linear(s, 2);
                } else {
                    q_.add_pair(s, t, 2);
                }
            }
        }
    }

    // q += 2 w (annotation); each slack halves the sum, so the divisor gains a factor 2.
    uint32_t add_slack(uint32_t line, const Annotation &a) {
        uint32_t w = q_.add_var(VarKind::Slack, line);
        if (a.constant) {
            q_.add_linear(w, 2);
        }
        for (uint32_t s : a.vars) {
            q_.add_pair(s, w, 2);
        }
        q_.half_divisor_exp += 2;
        return w;
    }

    void finish_fixed(uint32_t line, const Annotation &a, bool z) {
        bool c = a.constant != z;  // annotation = z  <=>  xor(S) = c
        std::vector<uint32_t> open;
        for (uint32_t s : a.vars) {
            if (auto f = q_.fixed_value(s)) {
                c = c != *f;
            } else {
                open.push_back(s);
            }
        }
        if (open.empty()) {
            if (c) {
                q_.infeasible = true;
            }
            return;
        }
        if (open.size() == 1 && q_.vars()[open[0]].kind == VarKind::Hadamard) {
            q_.fix(open[0], c);
            return;
        }
        uint32_t w = add_slack(line, a);
        if (z) {
            q_.add_linear(w, 2);
        }
    }

    std::size_t n_;
    PhasePolynomial q_;
};

}  // namespace

uint32_t PhasePolynomial::add_var(VarKind kind, uint32_t line) {
    vars_.push_back({kind, line});
    linear_.push_back(0);
    fixed_.push_back(-1);
    return static_cast<uint32_t>(vars_.size() - 1);
}

void PhasePolynomial::add_pair(uint32_t u, uint32_t v, uint8_t c) {
    if (u == v) {
        add_linear(u, c);
        return;
    }
    c &= 3;
    if (c == 0) {
        return;
    }
    auto [it, inserted] = pairs_.try_emplace(pair_key(u, v), c);
    if (!inserted) {
        it->second = static_cast<uint8_t>((it->second + c) & 3);
        if (it->second == 0) {
            pairs_.erase(it);
        }
    }
}

void PhasePolynomial::add_monomial(std::vector<uint32_t> m, uint8_t c) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    switch (m.size()) {
        case 0:
            add_constant(c);
            return;
        case 1:
            add_linear(m[0], c);
            return;
        case 2:
            add_pair(m[0], m[1], c);
            return;
        default:
            break;
    }
    c &= 3;
    if (c == 0) {
        return;
    }
    uint8_t &slot = higher_[m];
    slot = static_cast<uint8_t>((slot + c) & 3);
    if (slot == 0) {
        higher_.erase(m);
    }
}

void PhasePolynomial::fix(uint32_t v, bool bit) {
    if (fixed_.at(v) >= 0 && (fixed_[v] == 1) != bit) {
        infeasible = true;
    }
    fixed_[v] = bit ? 1 : 0;
}

std::vector<uint32_t> PhasePolynomial::free_vars() const {
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < vars_.size(); v++) {
        if (fixed_[v] < 0) {
            out.push_back(v);
        }
    }
    return out;
}

bool PhasePolynomial::is_classical() const {
    for (const auto &[key, c] : pairs_) {
        auto u = static_cast<uint32_t>(key >> 32);
        auto v = static_cast<uint32_t>(key);
        if ((c & 1) && fixed_[u] < 0 && fixed_[v] < 0) {
            return false;
        }
    }
    for (const auto &[m, c] : higher_) {
        std::size_t open = 0;
        bool vanishes = false;
        for (uint32_t v : m) {
            if (fixed_[v] == 0) {
                vanishes = true;
            } else if (fixed_[v] < 0) {
                open++;
            }
        }
        if (vanishes || open <= 1) {
            continue;
        }
        if (open > 2 || (c & 1)) {
            return false;
        }
    }
    return true;
}

PhasePolynomial PhasePolynomial::with_outputs(const BitVector &z) const {
    PhasePolynomial out = *this;
    if (!output_vars.empty()) {
        if (z.size() != output_vars.size()) {
            throw std::invalid_argument("with_outputs: output length mismatch");
        }
        for (std::size_t j = 0; j < z.size(); j++) {
            out.fix(output_vars[j], z.get(j));
        }
    } else if (!output_slacks.empty()) {
        if (z.size() != output_slacks.size()) {
            throw std::invalid_argument("with_outputs: output length mismatch");
        }
        for (std::size_t j = 0; j < z.size(); j++) {
            if (z.get(j)) {
                out.add_linear(output_slacks[j], 2);
            }
        }
    } else if (z.size() != 0) {
        throw std::invalid_argument("with_outputs: outputs are already fixed");
    }
    return out;
}

PhasePolynomial PhasePolynomial::with_inputs(const BitVector &x) const {
    if (x.size() != input_vars.size()) {
        throw std::invalid_argument("with_inputs: input length mismatch");
    }
    PhasePolynomial out = *this;
    for (std::size_t i = 0; i < x.size(); i++) {
        out.fix(input_vars[i], x.get(i));
    }
    return out;
}

PhasePolynomial build_phase_polynomial(const Circuit &c, const std::optional<BitVector> &x,
                                       const std::optional<BitVector> &z, OutputMode mode) {
    Builder builder(c, x);
    for (const Gate &g : c.gates()) {
        builder.apply(g);
    }
    builder.finish(z, mode);
    return builder.take();
}

ReducedForm reduce_to_form(const PhasePolynomial &q) {
    ReducedForm out;
    out.half_divisor_exp = q.half_divisor_exp;
    out.infeasible = q.infeasible;

    constexpr uint32_t kFixed = UINT32_MAX;
    std::vector<uint32_t> index(q.num_vars(), kFixed);
    for (uint32_t v = 0; v < q.num_vars(); v++) {
        if (!q.fixed_value(v)) {
            index[v] = static_cast<uint32_t>(out.vars.size());
            out.vars.push_back(v);
        }
    }
    const std::size_t n = out.vars.size();
    std::vector<uint8_t> lin(n, 0);
    BitMatrix b(n, n);
    unsigned phase = q.constant();

    for (uint32_t v = 0; v < q.num_vars(); v++) {
        if (index[v] != kFixed) {
            lin[index[v]] = static_cast<uint8_t>((lin[index[v]] + q.linear()[v]) & 3);
        } else if (*q.fixed_value(v)) {
            phase += q.linear()[v];
        }
    }
    for (const auto &[key, c] : q.pairs()) {
        auto u = static_cast<uint32_t>(key >> 32);
        auto v = static_cast<uint32_t>(key);
        uint32_t iu = index[u];
        uint32_t iv = index[v];
        if (iu != kFixed && iv != kFixed) {
            if (c & 1) {
                throw NonClassicalForm("reduce_to_form: cross term with odd coefficient");
            }
            b.flip(iu, iv);
            b.flip(iv, iu);
        } else if (iu != kFixed) {
            if (*q.fixed_value(v)) {
                lin[iu] = static_cast<uint8_t>((lin[iu] + c) & 3);
            }
        } else if (iv != kFixed) {
            if (*q.fixed_value(u)) {
                lin[iv] = static_cast<uint8_t>((lin[iv] + c) & 3);
            }
        } else if (*q.fixed_value(u) && *q.fixed_value(v)) {
            phase += c;
        }
    }
    std::map<std::pair<uint32_t, uint32_t>, unsigned> leftover_pairs;
    for (const auto &[m, c] : q.higher()) {
        std::vector<uint32_t> open;
        bool vanishes = false;
        for (uint32_t v : m) {
            if (index[v] != kFixed) {
                open.push_back(index[v]);
            } else if (!*q.fixed_value(v)) {
                vanishes = true;
            }
        }
        if (vanishes) {
            continue;
        }
        if (open.empty()) {
            phase += c;
        } else if (open.size() == 1) {
            lin[open[0]] = static_cast<uint8_t>((lin[open[0]] + c) & 3);
        } else if (open.size() == 2) {
            leftover_pairs[{open[0], open[1]}] += c;
        } else {
            throw NonClassicalForm("reduce_to_form: term of degree " + std::to_string(open.size()));
        }
    }
    for (const auto &[uv, c] : leftover_pairs) {
        if (c & 1) {
            throw NonClassicalForm("reduce_to_form: cross term with odd coefficient");
        }
        if (c & 2) {
            b.flip(uv.first, uv.second);
            b.flip(uv.second, uv.first);
        }
    }

    BitVector v(n);
    for (std::size_t i = 0; i < n; i++) {
        b.set(i, i, lin[i] & 1);
        v.set(i, (lin[i] >> 1) & 1);
    }
    out.form = QuadForm(std::move(b), std::move(v));
    out.phase = static_cast<uint8_t>(phase & 3);
    return out;
}

GraphStateReduction to_graph_state(const Circuit &c, const BitVector &x, const BitVector &z) {
    if (!c.is_stabilizer()) {
        throw std::invalid_argument("to_graph_state: circuit contains a CS gate");
    }
    GraphStateReduction out;
    out.reduced = reduce_to_form(build_phase_polynomial(c, x, z, OutputMode::Fixed));
    const QuadForm &f = out.reduced.form;
    out.graph = Graph(f.n);
    for (std::size_t i = 0; i < f.n; i++) {
        for (std::size_t j = i + 1; j < f.n; j++) {
            if (f.b.get(i, j)) {
                out.graph.toggle_edge(i, j);
            }
        }
        out.graph.add_loop(i, static_cast<uint8_t>(f.b.get(i, i) + 2 * f.v.get(i)));
    }
    return out;
}

}  // namespace stabrank
