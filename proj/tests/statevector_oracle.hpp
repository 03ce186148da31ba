// Copyright 2026 The ftverify Authors
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
//
// Test-only dense state-vector oracle.  Simulates a protocol on a handful
// of wires exactly, enumerating measurement outcomes by projection, so the
// branch-propagation engine can be checked against plain quantum mechanics.

#ifndef FTV_TESTS_STATEVECTOR_ORACLE_HPP
#define FTV_TESTS_STATEVECTOR_ORACLE_HPP

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "ftv/circuit.hpp"
#include "ftv/engine.hpp"

namespace ftv_oracle {

using Amp = std::complex<double>;
using State = std::vector<Amp>;

inline void apply_1q(State &s, size_t wire, const Amp m[2][2]) {
    size_t stride = size_t{1} << wire;
    for (size_t i = 0; i < s.size(); i++) {
        if (i & stride) {
            continue;
        }
        Amp a = s[i], b = s[i | stride];
        s[i] = m[0][0] * a + m[0][1] * b;
        s[i | stride] = m[1][0] * a + m[1][1] * b;
    }
}

inline void apply_pauli(State &s, const ftv::Pauli &p) {
    static const Amp I[2][2] = {{1, 0}, {0, 1}};
    (void)I;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        char c = p.letter(q);
        if (c == 'I') {
            continue;
        }
        Amp m[2][2] = {{0, 0}, {0, 0}};
        if (c == 'X') {
            m[0][1] = m[1][0] = 1;
        } else if (c == 'Z') {
            m[0][0] = 1;
            m[1][1] = -1;
        } else {
            m[0][1] = Amp(0, -1);
            m[1][0] = Amp(0, 1);
        }
        apply_1q(s, q, m);
    }
}

struct Outcome {
    std::vector<int8_t> flags;  // nontrivial bits by flag id, -1 absent
    State state;
};

// Runs the (single-segment) protocol, injecting `fault` after gate
// `inject_at` (-1 = no fault), splitting on measurement outcomes.
inline std::vector<Outcome> simulate(const ftv::Protocol &p, int inject_at, const ftv::Pauli &fault) {
    size_t n = p.num_wires();
    State init(size_t{1} << n, 0);
    init[0] = 1;  // all wires |0>
    struct Work {
        State s;
        std::vector<int8_t> flags;
        size_t gate;
    };
    const auto &gates = p.segments[0].circuit.gates;
    std::vector<Work> stack{Work{std::move(init), std::vector<int8_t>(p.flag_names.size(), -1), 0}};
    std::vector<Outcome> out;
    static const double kSqrt2 = std::sqrt(0.5);
    while (!stack.empty()) {
        Work w = std::move(stack.back());
        stack.pop_back();
        bool dead = false;
        for (size_t gi = w.gate; gi < gates.size() && !dead; gi++) {
            const ftv::Gate &g = gates[gi];
            switch (g.kind) {
                case ftv::GateKind::kPrepZ:
                case ftv::GateKind::kPrepX: {
                    // Reset |0>/|+>: wires are unentangled here by protocol
                    // construction (fresh or just measured).
                    size_t stride = size_t{1} << g.wires[0];
                    for (size_t i = 0; i < w.s.size(); i++) {
                        if (i & stride) {
                            w.s[i ^ stride] += w.s[i];
                            w.s[i] = 0;
                        }
                    }
                    if (g.kind == ftv::GateKind::kPrepX) {
                        Amp h[2][2] = {{kSqrt2, kSqrt2}, {kSqrt2, -kSqrt2}};
                        apply_1q(w.s, g.wires[0], h);
                    }
                    break;
                }
                case ftv::GateKind::kH: {
                    Amp h[2][2] = {{kSqrt2, kSqrt2}, {kSqrt2, -kSqrt2}};
                    apply_1q(w.s, g.wires[0], h);
                    break;
                }
                case ftv::GateKind::kS: {
                    Amp m[2][2] = {{1, 0}, {0, Amp(0, 1)}};
                    apply_1q(w.s, g.wires[0], m);
                    break;
                }
                case ftv::GateKind::kG: {
                    Amp m[2][2] = {{0, Amp(kSqrt2, -kSqrt2) * Amp(0, 1) * kSqrt2 * 0.0}, {0, 0}};
                    // G = (X + Y)/sqrt(2) = [[0, (1-i)/sqrt2],[(1+i)/sqrt2, 0]]
                    m[0][0] = 0;
                    m[0][1] = Amp(1, -1) * kSqrt2;
                    m[1][0] = Amp(1, 1) * kSqrt2;
                    m[1][1] = 0;
                    apply_1q(w.s, g.wires[0], m);
                    break;
                }
                case ftv::GateKind::kX:
                case ftv::GateKind::kY:
                case ftv::GateKind::kZ: {
                    char c = g.kind == ftv::GateKind::kX ? 'X' : g.kind == ftv::GateKind::kY ? 'Y' : 'Z';
                    apply_pauli(w.s, ftv::Pauli::single(p.num_wires(), g.wires[0], c));
                    break;
                }
                case ftv::GateKind::kCnot: {
                    size_t c = size_t{1} << g.wires[0], t = size_t{1} << g.wires[1];
                    for (size_t i = 0; i < w.s.size(); i++) {
                        if ((i & c) && !(i & t)) {
                            std::swap(w.s[i], w.s[i | t]);
                        }
                    }
                    break;
                }
                case ftv::GateKind::kCz: {
                    size_t a = size_t{1} << g.wires[0], b = size_t{1} << g.wires[1];
                    for (size_t i = 0; i < w.s.size(); i++) {
                        if ((i & a) && (i & b)) {
                            w.s[i] = -w.s[i];
                        }
                    }
                    break;
                }
                case ftv::GateKind::kCcz: {
                    size_t a = size_t{1} << g.wires[0], b = size_t{1} << g.wires[1], c = size_t{1} << g.wires[2];
                    for (size_t i = 0; i < w.s.size(); i++) {
                        if ((i & a) && (i & b) && (i & c)) {
                            w.s[i] = -w.s[i];
                        }
                    }
                    break;
                }
                case ftv::GateKind::kPerm: {
                    State t(w.s.size(), 0);
                    for (size_t i = 0; i < w.s.size(); i++) {
                        size_t j = 0;
                        for (size_t q = 0; q < n; q++) {
                            if ((i >> q) & 1) {
                                size_t to = q < g.perm_map.size() ? g.perm_map[q] : q;
                                j |= size_t{1} << to;
                            }
                        }
                        t[j] = w.s[i];
                    }
                    w.s = std::move(t);
                    break;
                }
                case ftv::GateKind::kMeasZ:
                case ftv::GateKind::kMeasX: {
                    size_t q = g.wires[0];
                    if (g.kind == ftv::GateKind::kMeasX) {
                        Amp h[2][2] = {{kSqrt2, kSqrt2}, {kSqrt2, -kSqrt2}};
                        apply_1q(w.s, q, h);
                    }
                    size_t stride = size_t{1} << q;
                    State s0(w.s.size(), 0), s1(w.s.size(), 0);
                    double n0 = 0, n1 = 0;
                    for (size_t i = 0; i < w.s.size(); i++) {
                        if (i & stride) {
                            s1[i ^ stride] = w.s[i];  // project and reset to |0>
                            n1 += std::norm(w.s[i]);
                        } else {
                            s0[i] = w.s[i];
                            n0 += std::norm(w.s[i]);
                        }
                    }
                    bool exp1 = g.expect_nontrivial;
                    if (n1 > 1e-18) {
                        Work fork{std::move(s1), w.flags, gi + 1};
                        fork.flags[static_cast<size_t>(g.flag_id)] = (true != exp1) ? 1 : 0;
                        stack.push_back(std::move(fork));
                    }
                    if (n0 > 1e-18) {
                        w.s = std::move(s0);
                        w.flags[static_cast<size_t>(g.flag_id)] = (false != exp1) ? 1 : 0;
                    } else {
                        dead = true;
                    }
                    break;
                }
                default:
                    throw std::logic_error("oracle: unsupported gate");
            }
            if (static_cast<int>(gi) == inject_at && !dead) {
                apply_pauli(w.s, fault);
            }
        }
        if (!dead) {
            out.push_back(Outcome{w.flags, std::move(w.s)});
        }
    }
    return out;
}

inline Amp inner(const State &a, const State &b) {
    Amp r = 0;
    for (size_t i = 0; i < a.size(); i++) {
        r += std::conj(a[i]) * b[i];
    }
    return r;
}

inline double norm2(const State &a) {
    double r = 0;
    for (const auto &v : a) {
        r += std::norm(v);
    }
    return r;
}

}  // namespace ftv_oracle

#endif
