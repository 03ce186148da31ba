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

#include "ftv/symplectic.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ftv/logical.hpp"

namespace ftv {

SymplecticMatrix SymplecticMatrix::identity(size_t k) {
    SymplecticMatrix m(k);
    for (size_t j = 0; j < 2 * k; j++) {
        m.cols_[j] = uint32_t{1} << j;
    }
    return m;
}

SymplecticMatrix SymplecticMatrix::h(size_t k, size_t q) {
    SymplecticMatrix m = identity(k);
    std::swap(m.cols_[q], m.cols_[k + q]);
    return m;
}

SymplecticMatrix SymplecticMatrix::s(size_t k, size_t q) {
    SymplecticMatrix m = identity(k);
    m.cols_[q] ^= uint32_t{1} << (k + q);  // X -> Y
    return m;
}

SymplecticMatrix SymplecticMatrix::g(size_t k, size_t q) {
    SymplecticMatrix m = identity(k);
    m.cols_[q] ^= uint32_t{1} << (k + q);       // X -> Y
    m.cols_[k + q] = uint32_t{1} << (k + q);    // Z -> Z
    return m;
}

SymplecticMatrix SymplecticMatrix::cnot(size_t k, size_t c, size_t t) {
    SymplecticMatrix m = identity(k);
    m.cols_[c] ^= uint32_t{1} << t;          // X_c -> X_c X_t
    m.cols_[k + t] ^= uint32_t{1} << (k + c);  // Z_t -> Z_c Z_t
    return m;
}

SymplecticMatrix SymplecticMatrix::swap(size_t k, size_t a, size_t b) {
    SymplecticMatrix m = identity(k);
    std::swap(m.cols_[a], m.cols_[b]);
    std::swap(m.cols_[k + a], m.cols_[k + b]);
    return m;
}

uint32_t SymplecticMatrix::apply(uint32_t v) const {
    uint32_t r = 0;
    while (v) {
        int j = std::countr_zero(v);
        r ^= cols_[static_cast<size_t>(j)];
        v &= v - 1;
    }
    return r;
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix &o) const {
    SymplecticMatrix r(k_);
    for (size_t j = 0; j < 2 * k_; j++) {
        r.cols_[j] = apply(o.cols_[j]);
    }
    return r;
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    size_t d = 2 * k_;
    std::vector<uint32_t> a = cols_, inv(d);
    for (size_t j = 0; j < d; j++) {
        inv[j] = uint32_t{1} << j;
    }
    // Column-reduce [a | inv].
    for (size_t r = 0; r < d; r++) {
        size_t piv = SIZE_MAX;
        for (size_t j = r; j < d; j++) {
            if ((a[j] >> r) & 1) {
                piv = j;
                break;
            }
        }
        assert(piv != SIZE_MAX);
        std::swap(a[r], a[piv]);
        std::swap(inv[r], inv[piv]);
        for (size_t j = 0; j < d; j++) {
            if (j != r && ((a[j] >> r) & 1)) {
                a[j] ^= a[r];
                inv[j] ^= inv[r];
            }
        }
    }
    SymplecticMatrix m(k_);
    m.cols_ = inv;
    return m;
}

bool SymplecticMatrix::is_identity() const {
    for (size_t j = 0; j < 2 * k_; j++) {
        if (cols_[j] != uint32_t{1} << j) {
            return false;
        }
    }
    return true;
}

bool symplectic_form(size_t k, uint32_t v, uint32_t w) {
    uint32_t mask = (uint32_t{1} << k) - 1;
    uint32_t vx = v & mask, vz = (v >> k) & mask;
    uint32_t wx = w & mask, wz = (w >> k) & mask;
    return (std::popcount((vx & wz) ^ (vz & wx)) & 1) != 0;
}

bool SymplecticMatrix::is_symplectic() const {
    for (size_t i = 0; i < 2 * k_; i++) {
        for (size_t j = i + 1; j < 2 * k_; j++) {
            bool want = symplectic_form(k_, uint32_t{1} << i, uint32_t{1} << j);
            if (symplectic_form(k_, cols_[i], cols_[j]) != want) {
                return false;
            }
        }
    }
    return true;
}

std::string SymplecticMatrix::str() const {
    std::ostringstream os;
    for (size_t r = 0; r < 2 * k_; r++) {
        for (size_t j = 0; j < 2 * k_; j++) {
            os << ((cols_[j] >> r) & 1);
        }
        os << "\n";
    }
    return os.str();
}

SymplecticMatrix circuit_to_symplectic(const StabilizerCode &code, const Circuit &c) {
    size_t k = code.num_logical();
    SymplecticMatrix m(k);
    for (size_t j = 0; j < 2 * k; j++) {
        const Pauli &rep = j < k ? code.logical_x()[j] : code.logical_z()[j - k];
        Pauli im = conjugate_clifford(c, rep, code.num_qubits());
        LogicalEffect e = code.logical_effect(im);
        if (e.kind == LogicalEffect::kDetectable) {
            throw std::invalid_argument("circuit is not code-preserving");
        }
        uint32_t v = 0;
        if (e.kind == LogicalEffect::kLogical) {
            for (size_t q = 0; q < k; q++) {
                if (e.logical.x_bit(q)) {
                    v |= uint32_t{1} << q;
                }
                if (e.logical.z_bit(q)) {
                    v |= uint32_t{1} << (k + q);
                }
            }
        }
        m.set_col(j, v);
    }
    if (!m.is_symplectic()) {
        throw std::logic_error("induced logical map is not symplectic");
    }
    return m;
}

namespace {

struct ChainLevel {
    uint32_t base = 0;
    std::vector<SymplecticMatrix> gens;
    // orbit point -> transversal element u with u(base) = point
    std::unordered_map<uint32_t, SymplecticMatrix> transversal;
    std::unordered_map<uint32_t, SymplecticMatrix> transversal_inv;
    std::vector<uint32_t> orbit;  // insertion order

    void rebuild(size_t k) {
        transversal.clear();
        transversal_inv.clear();
        orbit.clear();
        orbit.push_back(base);
        transversal.emplace(base, SymplecticMatrix::identity(k));
        transversal_inv.emplace(base, SymplecticMatrix::identity(k));
        for (size_t i = 0; i < orbit.size(); i++) {
            uint32_t p = orbit[i];
            const SymplecticMatrix up = transversal.at(p);
            for (const auto &s : gens) {
                uint32_t q = s.apply(p);
                if (!transversal.count(q)) {
                    SymplecticMatrix uq = s * up;
                    transversal_inv.emplace(q, uq.inverse());
                    transversal.emplace(q, std::move(uq));
                    orbit.push_back(q);
                }
            }
        }
    }
};

struct Chain {
    size_t k;
    std::vector<ChainLevel> levels;

    // Reduce g through levels starting at `from`; returns the residue and
    // the level at which it got stuck (levels.size() if it ran off the end).
    std::pair<SymplecticMatrix, size_t> strip(SymplecticMatrix g, size_t from) {
        for (size_t i = from; i < levels.size(); i++) {
            uint32_t p = g.apply(levels[i].base);
            auto it = levels[i].transversal_inv.find(p);
            if (it == levels[i].transversal_inv.end()) {
                return {g, i};
            }
            g = it->second * g;
        }
        return {g, levels.size()};
    }

    uint32_t greedy_base(const SymplecticMatrix &g) const {
        // Largest <g>-orbit among moved points.
        uint32_t best = 0;
        size_t best_len = 0;
        std::unordered_set<uint32_t> seen;
        for (uint32_t v = 1; v < (uint32_t{1} << (2 * k)); v++) {
            if (g.apply(v) == v || seen.count(v)) {
                continue;
            }
            size_t len = 0;
            uint32_t cur = v;
            do {
                seen.insert(cur);
                cur = g.apply(cur);
                len++;
            } while (cur != v);
            if (len > best_len) {
                best_len = len;
                best = v;
            }
        }
        return best;
    }

    void complete(size_t i) {
        levels[i].rebuild(k);
        // Index-based access throughout: deeper recursion may grow the
        // level vector and invalidate references.
        for (size_t oi = 0; oi < levels[i].orbit.size(); oi++) {
            uint32_t p = levels[i].orbit[oi];
            const SymplecticMatrix up = levels[i].transversal.at(p);
            for (size_t si = 0; si < levels[i].gens.size(); si++) {
                SymplecticMatrix s = levels[i].gens[si];
                uint32_t q = s.apply(p);
                SymplecticMatrix h = levels[i].transversal_inv.at(q) * s * up;
                if (h.is_identity()) {
                    continue;
                }
                auto [res, j] = strip(std::move(h), i + 1);
                if (res.is_identity()) {
                    continue;
                }
                if (j == levels.size()) {
                    ChainLevel nl;
                    nl.base = greedy_base(res);
                    levels.push_back(std::move(nl));
                }
                for (size_t l = i + 1; l <= j; l++) {
                    levels[l].gens.push_back(res);
                }
                for (size_t l = j; l > i; l--) {
                    complete(l);
                }
            }
        }
    }

    BigUint order() const {
        BigUint o = BigUint::one();
        for (const auto &L : levels) {
            o *= static_cast<uint64_t>(L.orbit.size());
        }
        return o;
    }
};

}  // namespace

BigUint group_order(const std::vector<SymplecticMatrix> &gens) {
    std::vector<SymplecticMatrix> work;
    for (const auto &g : gens) {
        if (!g.is_symplectic()) {
            throw std::invalid_argument("group_order: generator is not symplectic");
        }
        if (!g.is_identity()) {
            work.push_back(g);
        }
    }
    if (work.empty()) {
        return BigUint::one();
    }
    Chain chain;
    chain.k = work[0].k();
    ChainLevel l0;
    l0.gens = work;
    l0.base = chain.greedy_base(work[0]);
    // Prefer a base moved by some generator with the largest single-gen orbit.
    size_t best_len = 0;
    for (const auto &g : work) {
        uint32_t b = chain.greedy_base(g);
        uint32_t cur = b;
        size_t len = 0;
        do {
            cur = g.apply(cur);
            len++;
        } while (cur != b);
        if (len > best_len) {
            best_len = len;
            l0.base = b;
        }
    }
    chain.levels.push_back(std::move(l0));
    chain.complete(0);
    return chain.order();
}

BigUint clifford_mod_pauli_order(size_t k) {
    BigUint o = BigUint::one();
    for (size_t i = 0; i < k * k; i++) {
        o *= 2;
    }
    for (size_t j = 1; j <= k; j++) {
        uint64_t f = (uint64_t{1} << (2 * j)) - 1;
        o *= f;
    }
    return o;
}

BigUint factorial(size_t k) {
    BigUint o = BigUint::one();
    for (size_t i = 2; i <= k; i++) {
        o *= static_cast<uint64_t>(i);
    }
    return o;
}

BigUint gl2_order(size_t k) {
    BigUint o = BigUint::one();
    for (size_t j = 0; j < k; j++) {
        o *= ((uint64_t{1} << k) - (uint64_t{1} << j));
    }
    return o;
}

std::vector<SymplecticMatrix> cnot_generators(size_t k) {
    std::vector<SymplecticMatrix> g;
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            if (i != j) {
                g.push_back(SymplecticMatrix::cnot(k, i, j));
            }
        }
    }
    return g;
}

std::vector<SymplecticMatrix> cnot_h_generators(size_t k) {
    auto g = cnot_generators(k);
    for (size_t i = 0; i < k; i++) {
        g.push_back(SymplecticMatrix::h(k, i));
    }
    return g;
}

std::vector<SymplecticMatrix> transposition_generators(size_t k) {
    std::vector<SymplecticMatrix> g;
    for (size_t i = 0; i + 1 < k; i++) {
        g.push_back(SymplecticMatrix::swap(k, i, i + 1));
    }
    return g;
}

std::vector<SymplecticMatrix> clifford_generators(size_t k) {
    auto g = cnot_h_generators(k);
    for (size_t i = 0; i < k; i++) {
        g.push_back(SymplecticMatrix::s(k, i));
    }
    return g;
}

uint64_t group_order_bfs(const std::vector<SymplecticMatrix> &gens, uint64_t limit) {
    if (gens.empty()) {
        return 1;
    }
    auto key = [](const SymplecticMatrix &m) {
        std::string s;
        for (size_t j = 0; j < m.dim(); j++) {
            uint32_t c = m.col(j);
            s.append(reinterpret_cast<const char *>(&c), sizeof(c));
        }
        return s;
    };
    std::unordered_set<std::string> seen;
    std::vector<SymplecticMatrix> frontier{SymplecticMatrix::identity(gens[0].k())};
    seen.insert(key(frontier[0]));
    while (!frontier.empty()) {
        std::vector<SymplecticMatrix> next;
        for (const auto &m : frontier) {
            for (const auto &g : gens) {
                SymplecticMatrix t = g * m;
                auto s = key(t);
                if (seen.insert(s).second) {
                    next.push_back(std::move(t));
                    if (seen.size() > limit) {
                        throw std::runtime_error("group_order_bfs: limit exceeded");
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

namespace {

// Completes the pair (v1, w1) with form(v1, w1) = 1 to a full symplectic
// basis; returns the change-of-basis matrix whose columns are the new basis
// vectors in the old coordinates, pairs interleaved as (x_i..., z_i...).
SymplecticMatrix complete_symplectic_basis(size_t k, uint32_t v1, uint32_t w1) {
    std::vector<uint32_t> vs{v1}, ws{w1};
    std::vector<uint32_t> candidates;
    for (uint32_t v = 1; v < (uint32_t{1} << (2 * k)); v++) {
        candidates.push_back(v);
    }
    while (vs.size() < k) {
        // Find v orthogonal to all chosen pairs.
        uint32_t v = 0;
        for (uint32_t cand : candidates) {
            uint32_t red = cand;
            for (size_t i = 0; i < vs.size(); i++) {
                if (symplectic_form(k, red, ws[i])) {
                    red ^= vs[i];
                }
                if (symplectic_form(k, red, vs[i])) {
                    red ^= ws[i];
                }
            }
            if (red != 0) {
                bool indep = true;
                // red is outside span of chosen pairs iff nonzero after
                // reduction (pairs are hyperbolic, reduction is exact).
                if (indep) {
                    v = red;
                    break;
                }
            }
        }
        assert(v != 0);
        // Find w with form(v, w) = 1, orthogonal to earlier pairs.
        uint32_t w = 0;
        for (uint32_t cand : candidates) {
            uint32_t red = cand;
            for (size_t i = 0; i < vs.size(); i++) {
                if (symplectic_form(k, red, ws[i])) {
                    red ^= vs[i];
                }
                if (symplectic_form(k, red, vs[i])) {
                    red ^= ws[i];
                }
            }
            if (red != 0 && symplectic_form(k, v, red)) {
                w = red;
                break;
            }
        }
        assert(w != 0);
        vs.push_back(v);
        ws.push_back(w);
    }
    SymplecticMatrix b(k);
    for (size_t i = 0; i < k; i++) {
        b.set_col(i, vs[i]);
        b.set_col(k + i, ws[i]);
    }
    assert(b.is_symplectic());
    return b;
}

}  // namespace

std::string SectionVdReport::summary() const {
    std::ostringstream os;
    os << "generated group order: " << main_order.to_string() << " (~" << main_order.to_sci_string() << ")\n";
    os << "<CNOT,H> on 6 qubits:  " << cnot_h_6.to_string() << " (~" << cnot_h_6.to_sci_string() << ")\n";
    os << "equal: " << (main_matches_cnot_h_6 ? "yes" : "NO") << "\n";
    os << "adding transversal G:  " << with_g_order.to_string() << " (triples: " << (g_triples ? "yes" : "NO")
       << ")\n";
    os << "restricted action:     " << restricted_order.to_string()
       << " (half of <CNOT,H>_6: " << (restricted_is_half ? "yes" : "NO") << ")\n";
    return os.str();
}

SectionVdReport reproduce_group_size_claims() {
    SectionVdReport rep;
    auto code = StabilizerCode::hamming15();
    size_t n = code.num_qubits();
    size_t k = code.num_logical();

    auto perm_circuit = [&](const std::vector<std::vector<size_t>> &cycles) {
        Circuit c;
        Gate g;
        g.kind = GateKind::kPerm;
        g.perm_map = cycles_to_permutation_map(cycles, n);
        c.gates.push_back(g);
        return c;
    };
    std::vector<std::vector<size_t>> s1{{0, 1, 2}, {3, 13, 9}, {4, 11, 8}, {5, 12, 10}, {6, 14, 7}};
    std::vector<std::vector<size_t>> s2{{0, 9, 4, 1, 11}, {2, 5, 3, 7, 8}, {6, 13, 12, 10, 14}};
    std::vector<std::vector<size_t>> s3{{0, 9, 14, 2, 7, 12}, {3, 5}, {4, 11, 10}, {6, 13, 8}};
    std::vector<std::vector<size_t>> fig5a_perm{{5, 6}, {7, 9, 8, 10}, {11, 13, 12, 14}};

    Circuit trans_h;
    for (size_t q = 0; q < n; q++) {
        Gate g;
        g.kind = GateKind::kH;
        g.wires = {q};
        trans_h.gates.push_back(g);
    }
    Circuit trans_g;
    for (size_t q = 0; q < n; q++) {
        Gate g;
        g.kind = GateKind::kG;
        g.wires = {q};
        trans_g.gates.push_back(g);
    }

    std::vector<SymplecticMatrix> gens;
    gens.push_back(circuit_to_symplectic(code, permutation_to_cz_circuit(code, fig5a_perm)));
    gens.push_back(circuit_to_symplectic(code, perm_circuit(s1)));
    gens.push_back(circuit_to_symplectic(code, perm_circuit(s2)));
    gens.push_back(circuit_to_symplectic(code, perm_circuit(s3)));
    gens.push_back(circuit_to_symplectic(code, trans_h));

    rep.main_order = group_order(gens);
    rep.cnot_h_6 = group_order(cnot_h_generators(6));
    rep.main_matches_cnot_h_6 = rep.main_order == rep.cnot_h_6;

    auto gens_g = gens;
    gens_g.push_back(circuit_to_symplectic(code, trans_g));
    rep.with_g_order = group_order(gens_g);
    rep.g_triples = rep.with_g_order == rep.main_order * 3;

    // Logical basis with one qubit carried by transversal X / transversal Z.
    Pauli xall(n), zall(n);
    for (size_t q = 0; q < n; q++) {
        xall.set_x(q, true);
        zall.set_z(q, true);
    }
    auto ex = code.logical_effect(xall);
    auto ez = code.logical_effect(zall);
    if (ex.kind != LogicalEffect::kLogical || ez.kind != LogicalEffect::kLogical) {
        throw std::logic_error("transversal X/Z are not logical operators");
    }
    auto to_vec = [&](const Pauli &l) {
        uint32_t v = 0;
        for (size_t q = 0; q < k; q++) {
            if (l.x_bit(q)) {
                v |= uint32_t{1} << q;
            }
            if (l.z_bit(q)) {
                v |= uint32_t{1} << (k + q);
            }
        }
        return v;
    };
    SymplecticMatrix basis = complete_symplectic_basis(k, to_vec(ex.logical), to_vec(ez.logical));
    SymplecticMatrix basis_inv = basis.inverse();
    std::vector<SymplecticMatrix> restricted;
    for (const auto &m : gens) {
        SymplecticMatrix t = basis_inv * m * basis;
        // The first hyperbolic pair must map within itself.
        uint32_t ex1 = uint32_t{1} << 0, ez1 = uint32_t{1} << k;
        uint32_t ix = t.apply(ex1), iz = t.apply(ez1);
        if (!((ix == ex1 && iz == ez1) || (ix == ez1 && iz == ex1))) {
            throw std::logic_error("generator does not preserve the transversal-X/Z pair");
        }
        SymplecticMatrix r(k - 1);
        for (size_t j = 0; j < 2 * (k - 1); j++) {
            size_t src = j < k - 1 ? j + 1 : k + (j - (k - 1)) + 1;
            uint32_t im = t.apply(uint32_t{1} << src);
            uint32_t v = 0;
            for (size_t b = 0; b < 2 * k; b++) {
                if (!((im >> b) & 1)) {
                    continue;
                }
                if (b == 0 || b == k) {
                    throw std::logic_error("restricted image leaks onto the fixed qubit");
                }
                size_t dst = b < k ? b - 1 : (k - 1) + (b - k - 1);
                v |= uint32_t{1} << dst;
            }
            r.set_col(j, v);
        }
        restricted.push_back(r);
    }
    rep.restricted_order = group_order(restricted);
    rep.restricted_is_half = rep.cnot_h_6 == rep.restricted_order * 2;
    return rep;
}

}  // namespace ftv
