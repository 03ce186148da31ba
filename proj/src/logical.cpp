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

#include "ftv/logical.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "ftv/engine.hpp"

namespace ftv {

Pauli conjugate_clifford(const Circuit &c, const Pauli &p, size_t num_wires) {
    Pauli cur(num_wires);
    cur.set_phase(p.phase());
    for (size_t q = 0; q < p.num_qubits(); q++) {
        cur.set_x(q, p.x_bit(q));
        cur.set_z(q, p.z_bit(q));
    }
    for (const Gate &g : c.gates) {
        if (!g.is_unitary() && g.kind != GateKind::kPerm) {
            throw std::invalid_argument("conjugate_clifford: non-unitary gate in circuit");
        }
        auto branches = conjugate_through_gate(g, cur);
        if (branches.size() != 1) {
            throw std::invalid_argument("conjugate_clifford: CCZ meets an X component");
        }
        cur = branches[0];
    }
    return cur;
}

LogicalCliffordClaim LogicalCliffordClaim::identity(size_t k) {
    LogicalCliffordClaim c;
    for (size_t j = 0; j < k; j++) {
        c.x_images.push_back(Pauli::single(k, j, 'X'));
        c.z_images.push_back(Pauli::single(k, j, 'Z'));
    }
    return c;
}

LogicalCliffordClaim LogicalCliffordClaim::permutation(size_t k, const std::vector<std::vector<size_t>> &cycles) {
    auto map = cycles_to_permutation_map(cycles, k);
    LogicalCliffordClaim c;
    for (size_t j = 0; j < k; j++) {
        c.x_images.push_back(Pauli::single(k, map[j], 'X'));
        c.z_images.push_back(Pauli::single(k, map[j], 'Z'));
    }
    return c;
}

LogicalCliffordClaim LogicalCliffordClaim::transversal_h(size_t k) {
    LogicalCliffordClaim c;
    for (size_t j = 0; j < k; j++) {
        c.x_images.push_back(Pauli::single(k, j, 'Z'));
        c.z_images.push_back(Pauli::single(k, j, 'X'));
    }
    return c;
}

LogicalCliffordClaim LogicalCliffordClaim::all_pairs_cz_after_g(size_t k) {
    // Transversal G then CZ on every pair: X_j -> Y_j prod_{i != j} Z_i,
    // Z_j -> Z_j.
    LogicalCliffordClaim c;
    for (size_t j = 0; j < k; j++) {
        Pauli x = Pauli::single(k, j, 'Y');
        for (size_t i = 0; i < k; i++) {
            if (i != j) {
                x = x * Pauli::single(k, i, 'Z');
            }
        }
        x.set_phase(x.phase() & 2 ? 2 : 0);  // keep sign only
        c.x_images.push_back(x);
        c.z_images.push_back(Pauli::single(k, j, 'Z'));
    }
    return c;
}

bool LogicalCliffordClaim::is_symplectic() const {
    size_t k = x_images.size();
    auto img = [&](size_t i) -> const Pauli & { return i < k ? x_images[i] : z_images[i - k]; };
    for (size_t i = 0; i < 2 * k; i++) {
        for (size_t j = 0; j < 2 * k; j++) {
            bool want_anti = (i + k == j) || (j + k == i);
            if (img(i).commutes_with(img(j)) == want_anti) {
                return false;
            }
        }
    }
    return true;
}

bool check_code_preserving(const StabilizerCode &code, const Circuit &c, size_t *sign_flips) {
    size_t flips = 0;
    bool patterns_ok = true;
    for (const Pauli &g : code.generators()) {
        Pauli im = conjugate_clifford(c, g, code.num_qubits());
        LogicalEffect e = code.logical_effect(im);
        if (e.kind != LogicalEffect::kStabilizer) {
            patterns_ok = false;
        } else if (e.sign) {
            // -g stabilizes the wrong space: the circuit moves code states
            // unless a Pauli correction fixes the sign.
            flips++;
        }
    }
    if (sign_flips) {
        *sign_flips = flips;
    }
    return patterns_ok && flips == 0;
}

bool check_clifford_claim(const StabilizerCode &code, const Circuit &c, const LogicalCliffordClaim &claim,
                          std::string *why) {
    if (!claim.is_symplectic()) {
        throw std::invalid_argument("claim map is not symplectic");
    }
    size_t k = code.num_logical();
    for (size_t j = 0; j < 2 * k; j++) {
        const Pauli &rep = j < k ? code.logical_x()[j] : code.logical_z()[j - k];
        const Pauli &want = j < k ? claim.x_images[j] : claim.z_images[j - k];
        Pauli im = conjugate_clifford(c, rep, code.num_qubits());
        LogicalEffect e = code.logical_effect(im);
        if (e.kind == LogicalEffect::kDetectable) {
            if (why) {
                *why = "image of a logical operator leaves the code";
            }
            return false;
        }
        Pauli got = e.kind == LogicalEffect::kLogical ? e.logical : Pauli::identity(k);
        bool got_sign = e.sign;
        bool want_sign = (want.phase() & 2) != 0;
        if (!got.same_pattern(want) || got_sign != want_sign) {
            if (why) {
                std::ostringstream os;
                os << (j < k ? "X" : "Z") << (j % k) + 1 << " -> " << (got_sign ? "-" : "+") << got.str()
                   << ", claimed " << (want_sign ? "-" : "+") << want.str();
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

namespace {

// Phase exponent of a diagonal circuit on one computational basis string.
// Perm gates relabel the string as evaluation walks the gate list.
int eval_phase(const Circuit &c, uint64_t bits) {
    int e = 0;
    uint64_t s = bits;
    for (const Gate &g : c.gates) {
        switch (g.kind) {
            case GateKind::kZ:
                e ^= static_cast<int>((s >> g.wires[0]) & 1);
                break;
            case GateKind::kCz:
                e ^= static_cast<int>(((s >> g.wires[0]) & (s >> g.wires[1])) & 1);
                break;
            case GateKind::kCcz:
                e ^= static_cast<int>(((s >> g.wires[0]) & (s >> g.wires[1]) & (s >> g.wires[2])) & 1);
                break;
            case GateKind::kPerm: {
                uint64_t t = 0;
                for (size_t q = 0; q < g.perm_map.size(); q++) {
                    if ((s >> q) & 1) {
                        t |= uint64_t{1} << g.perm_map[q];
                    }
                }
                s = t;
                break;
            }
            default:
                throw std::invalid_argument("diagonal claim check: circuit has a non-diagonal gate");
        }
    }
    return e;
}

}  // namespace

std::string DiagonalCheckResult::discovered_str() const {
    std::ostringstream os;
    if (discovered.empty()) {
        return "identity";
    }
    for (size_t i = 0; i < discovered.size(); i++) {
        if (i) {
            os << " ";
        }
        const auto &f = discovered[i];
        if (f.size() == 1) {
            os << "Z" << f[0] + 1;
        } else {
            for (size_t j = 0; j + 1 < f.size(); j++) {
                os << "C";
            }
            os << "Z(";
            for (size_t j = 0; j < f.size(); j++) {
                os << (j ? "," : "") << f[j] + 1;
            }
            os << ")";
        }
    }
    return os.str();
}

DiagonalCheckResult check_diagonal_claim(const StabilizerCode &code, const Circuit &c, const DiagonalClaim &claim,
                                         bool discover) {
    DiagonalCheckResult res;
    size_t k = code.num_logical();
    if (k > 20) {
        throw std::invalid_argument("diagonal claim enumeration limited to k <= 20");
    }
    std::vector<int> f(size_t{1} << k, 0);
    for (uint64_t label = 0; label < (uint64_t{1} << k); label++) {
        std::vector<bool> pattern(k);
        for (size_t j = 0; j < k; j++) {
            pattern[j] = (label >> j) & 1;
        }
        auto support = code.codeword_basis_support(pattern);
        int first = -1;
        for (uint64_t s : support) {
            int e = eval_phase(c, s);
            if (first < 0) {
                first = e;
            } else if (e != first) {
                res.valid_logical_op = false;
                res.matches = false;
                res.message = "phase not constant on a codeword support (label " + std::to_string(label) + ")";
                return res;
            }
        }
        f[label] = first;
    }
    // ANF (Moebius) transform to monomial support.
    std::vector<int> anf = f;
    for (size_t j = 0; j < k; j++) {
        for (uint64_t m = 0; m < (uint64_t{1} << k); m++) {
            if ((m >> j) & 1) {
                anf[m] ^= anf[m ^ (uint64_t{1} << j)];
            }
        }
    }
    for (uint64_t m = 1; m < (uint64_t{1} << k); m++) {
        if (anf[m]) {
            std::vector<size_t> sub;
            for (size_t j = 0; j < k; j++) {
                if ((m >> j) & 1) {
                    sub.push_back(j);
                }
            }
            res.discovered.push_back(sub);
        }
    }
    if (anf[0]) {
        res.message = "global -1 phase on the all-zero codeword";
    }
    if (discover) {
        res.matches = true;
        return res;
    }
    // Claim as ANF monomials.
    std::vector<std::vector<size_t>> want = claim.factors;
    for (auto &fac : want) {
        std::sort(fac.begin(), fac.end());
    }
    std::sort(want.begin(), want.end());
    auto got = res.discovered;
    std::sort(got.begin(), got.end());
    res.matches = want == got && !anf[0];
    if (!res.matches && res.message.empty()) {
        res.message = "phase function is " + res.discovered_str();
    }
    return res;
}

std::vector<size_t> cycles_to_permutation_map(const std::vector<std::vector<size_t>> &cycles, size_t n) {
    std::vector<size_t> map(n);
    for (size_t q = 0; q < n; q++) {
        map[q] = q;
    }
    for (const auto &cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); i++) {
            map[cyc[i]] = cyc[(i + 1) % cyc.size()];
        }
    }
    return map;
}

Circuit permutation_to_cz_circuit(const StabilizerCode &code, const std::vector<std::vector<size_t>> &cycles) {
    auto map = cycles_to_permutation_map(cycles, code.num_qubits());
    if (!code.is_automorphism(map)) {
        throw std::invalid_argument("permutation is not a code automorphism");
    }
    Circuit c;
    for (const auto &cyc : cycles) {
        if (cyc.size() == 2) {
            continue;  // the two CZ gates of a 2-cycle cancel
        }
        for (size_t i = 0; i < cyc.size(); i++) {
            Gate g;
            g.kind = GateKind::kCz;
            g.wires = {cyc[i], cyc[(i + 1) % cyc.size()]};
            c.gates.push_back(g);
        }
    }
    return c;
}

}  // namespace ftv
