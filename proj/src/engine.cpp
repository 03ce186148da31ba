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

#include "ftv/engine.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <sstream>
#include <stdexcept>

namespace ftv {

bool FaultBranch::all_flags_trivial() const {
    for (int8_t f : flags) {
        if (f == 1) {
            return false;
        }
    }
    return true;
}

std::string FaultBranch::flag_signature(const Protocol &p) const {
    std::string s;
    for (size_t i = 0; i < flags.size(); i++) {
        char c = flags[i] < 0 ? '.' : flags[i] ? '1' : '0';
        s.push_back(c);
    }
    (void)p;
    return s;
}

namespace {

// In-place Clifford conjugation rules on the packed representation
// i^p X^x Z^z.  See the per-gate derivations in the unit tests.
void apply_clifford(const Gate &g, Pauli *e) {
    switch (g.kind) {
        case GateKind::kX: {
            size_t q = g.wires[0];
            if (e->z_bit(q)) {
                e->set_phase((e->phase() + 2) & 3);
            }
            break;
        }
        case GateKind::kY: {
            size_t q = g.wires[0];
            if (e->x_bit(q) != e->z_bit(q)) {
                e->set_phase((e->phase() + 2) & 3);
            }
            break;
        }
        case GateKind::kZ: {
            size_t q = g.wires[0];
            if (e->x_bit(q)) {
                e->set_phase((e->phase() + 2) & 3);
            }
            break;
        }
        case GateKind::kH: {
            size_t q = g.wires[0];
            bool x = e->x_bit(q), z = e->z_bit(q);
            if (x && z) {
                e->set_phase((e->phase() + 2) & 3);
            }
            e->set_x(q, z);
            e->set_z(q, x);
            break;
        }
        case GateKind::kS: {
            size_t q = g.wires[0];
            if (e->x_bit(q)) {
                e->set_z(q, !e->z_bit(q));
                e->set_phase((e->phase() + 1) & 3);
            }
            break;
        }
        case GateKind::kG: {
            size_t q = g.wires[0];
            bool x = e->x_bit(q), z = e->z_bit(q);
            if (x) {
                e->set_z(q, !z);
                e->set_phase((e->phase() + 1) & 3);
            }
            if (z) {
                e->set_phase((e->phase() + 2) & 3);
            }
            break;
        }
        case GateKind::kCnot: {
            size_t c = g.wires[0], t = g.wires[1];
            if (e->x_bit(c)) {
                e->set_x(t, !e->x_bit(t));
            }
            if (e->z_bit(t)) {
                e->set_z(c, !e->z_bit(c));
            }
            break;
        }
        case GateKind::kCz: {
            size_t a = g.wires[0], b = g.wires[1];
            bool xa = e->x_bit(a), xb = e->x_bit(b);
            if (xa) {
                e->set_z(b, !e->z_bit(b));
            }
            if (xb) {
                e->set_z(a, !e->z_bit(a));
            }
            if (xa && xb) {
                e->set_phase((e->phase() + 2) & 3);
            }
            break;
        }
        case GateKind::kPerm: {
            Pauli moved(e->num_qubits());
            moved.set_phase(e->phase());
            size_t nd = g.perm_map.size();
            for (size_t q = 0; q < e->num_qubits(); q++) {
                size_t to = q < nd ? g.perm_map[q] : q;
                moved.set_x(to, e->x_bit(q));
                moved.set_z(to, e->z_bit(q));
            }
            *e = moved;
            break;
        }
        default:
            assert(false);
    }
}

}  // namespace

std::vector<Pauli> conjugate_through_gate(const Gate &g, const Pauli &p) {
    if (g.kind == GateKind::kCcz) {
        size_t a = g.wires[0], b = g.wires[1], c = g.wires[2];
        std::vector<size_t> x_legs;
        for (size_t w : {a, b, c}) {
            if (p.x_bit(w)) {
                x_legs.push_back(w);
            }
        }
        if (x_legs.empty()) {
            return {p};
        }
        std::vector<Pauli> branches{p};
        for (size_t leg : x_legs) {
            std::vector<size_t> others;
            for (size_t w : {a, b, c}) {
                if (w != leg) {
                    others.push_back(w);
                }
            }
            std::vector<Pauli> next;
            next.reserve(branches.size() * 4);
            for (const Pauli &base : branches) {
                for (int m = 0; m < 4; m++) {
                    Pauli q = base;
                    if (m & 1) {
                        q.set_z(others[0], !q.z_bit(others[0]));
                    }
                    if (m & 2) {
                        q.set_z(others[1], !q.z_bit(others[1]));
                    }
                    q.set_phase(0);  // branch phases dropped
                    next.push_back(q);
                }
            }
            branches = std::move(next);
        }
        std::sort(branches.begin(), branches.end());
        branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
        return branches;
    }
    Pauli e = p;
    apply_clifford(g, &e);
    return {e};
}

namespace {

// A pending controlled-phase dressing picked up by X components crossing
// CCZ gates: the residual operator is err * prod CZ(u,v) over the pairs.
// Pairs cancel in twos (CZ^2 = I), which kills the spurious branches a
// naive per-gate expansion would invent for faults that stabilize the
// split-ancilla state.  Expansion into Pauli branches happens only where
// something non-diagonal touches a dressed wire.
using DressPairs = std::vector<std::pair<size_t, size_t>>;

void xor_pair(DressPairs *d, size_t u, size_t v) {
    if (u > v) {
        std::swap(u, v);
    }
    auto it = std::find(d->begin(), d->end(), std::make_pair(u, v));
    if (it == d->end()) {
        d->emplace_back(u, v);
    } else {
        d->erase(it);
    }
}

struct WorkItem {
    Pauli err;
    DressPairs pending;
    std::vector<int8_t> flags;
    std::vector<int> path;
    std::vector<EcRecord> ec_records;
    std::vector<Gate> frame;  // diagonal data gates executed (for framed EC)
    int segment;
    size_t gate_index;
    bool injected;
};

// Syndrome of the data part of `err` against generators conjugated
// forward through the executed diagonal frame.
uint32_t ec_syndrome(const Protocol &p, const WorkItem &w, EcBasis basis, bool framed, Pauli *data_out) {
    const StabilizerCode &code = *p.code;
    Pauli data(p.num_data);
    for (size_t q = 0; q < p.num_data; q++) {
        data.set_x(q, w.err.x_bit(q));
        data.set_z(q, w.err.z_bit(q));
    }
    *data_out = data;
    const std::vector<size_t> *gen_idx = nullptr;
    if (basis == EcBasis::kX) {
        gen_idx = &code.z_type_generators();  // Z-type stabilizers flag X components
    } else if (basis == EcBasis::kZ) {
        gen_idx = &code.x_type_generators();
    }
    uint32_t bits = 0;
    size_t count = gen_idx ? gen_idx->size() : code.num_generators();
    for (size_t i = 0; i < count; i++) {
        Pauli gen = gen_idx ? code.generator((*gen_idx)[i]) : code.generator(i);
        if (framed) {
            // Only a diagonal Clifford frame can move generators exactly.
            for (const Gate &fg : w.frame) {
                if (fg.kind == GateKind::kCcz) {
                    throw std::invalid_argument("framed ecstep after a CCZ gate is not supported");
                }
            }
            Pauli lifted(p.num_wires());
            for (size_t q = 0; q < p.num_data; q++) {
                lifted.set_x(q, gen.x_bit(q));
                lifted.set_z(q, gen.z_bit(q));
            }
            for (const Gate &fg : w.frame) {
                apply_clifford(fg, &lifted);
            }
            Pauli back(p.num_data);
            for (size_t q = 0; q < p.num_data; q++) {
                back.set_x(q, lifted.x_bit(q));
                back.set_z(q, lifted.z_bit(q));
            }
            gen = back;
        }
        if (!data.commutes_with(gen)) {
            bits |= uint32_t{1} << i;
        }
    }
    return bits;
}

}  // namespace

std::vector<FaultBranch> propagate_fault(const Protocol &p, const std::vector<FaultLocation> &locs,
                                         const Injection &inj) {
    const FaultLocation *loc = inj.location >= 0 ? &locs[static_cast<size_t>(inj.location)] : nullptr;
    std::vector<FaultBranch> out;
    std::vector<WorkItem> stack;
    WorkItem init;
    init.err = Pauli::identity(p.num_wires());
    init.flags.assign(p.flag_names.size(), -1);
    init.segment = p.entry;
    init.gate_index = 0;
    init.injected = loc == nullptr;
    init.path.push_back(p.entry);
    stack.push_back(std::move(init));

    // Splits one pending pair of `w` into its four Pauli expansion terms;
    // three forks continue from (segment, gate) with the same remaining
    // work.  Branch phases are dropped here, as everywhere on CCZ paths.
    auto expand_pair = [&](WorkItem &w, size_t pi, std::vector<WorkItem> *st) {
        auto [u, v] = w.pending[pi];
        w.pending.erase(w.pending.begin() + static_cast<long>(pi));
        for (int m = 1; m < 4; m++) {
            WorkItem fork = w;
            if (m & 1) {
                fork.err.set_z(u, !fork.err.z_bit(u));
            }
            if (m & 2) {
                fork.err.set_z(v, !fork.err.z_bit(v));
            }
            st->push_back(std::move(fork));
        }
    };
    // Expands every pending pair touching wire q (or all pairs when
    // q == SIZE_MAX) before a non-diagonal step there.
    auto expand_wire = [&](WorkItem &w, size_t q, std::vector<WorkItem> *st) {
        for (size_t pi = 0; pi < w.pending.size();) {
            if (q == SIZE_MAX || w.pending[pi].first == q || w.pending[pi].second == q) {
                expand_pair(w, pi, st);
            } else {
                pi++;
            }
        }
    };

    while (!stack.empty()) {
        WorkItem w = std::move(stack.back());
        stack.pop_back();
        bool dead = false;
        while (!dead) {
            const Segment &seg = p.segments[static_cast<size_t>(w.segment)];
            for (size_t gi = w.gate_index; gi < seg.circuit.gates.size(); gi++) {
                const Gate &g = seg.circuit.gates[gi];
                bool inject_here = loc && !w.injected && loc->segment == w.segment &&
                                   loc->gate == static_cast<int>(gi) && loc->kind != FaultLocation::kIdle;
                switch (g.kind) {
                    case GateKind::kPrepZ:
                    case GateKind::kPrepX:
                        w.gate_index = gi;  // forks rerun from this gate
                        expand_wire(w, g.wires[0], &stack);
                        w.err.clear_site(g.wires[0]);
                        break;
                    case GateKind::kMeasZ:
                    case GateKind::kMeasX: {
                        size_t q = g.wires[0];
                        if (g.kind == GateKind::kMeasX) {
                            // A dressing on the measured wire decoheres in
                            // the X basis; expand it first.
                            w.gate_index = gi;
                            expand_wire(w, q, &stack);
                        }
                        bool flip = g.kind == GateKind::kMeasZ ? w.err.x_bit(q) : w.err.z_bit(q);
                        if (inject_here && loc->kind == FaultLocation::kMeasFlip) {
                            flip = !flip;
                            w.injected = true;
                            inject_here = false;
                        }
                        bool outcome = g.expect_nontrivial != !flip;  // actual measured bit
                        if (g.kind == GateKind::kMeasZ) {
                            // Pending CZ dressings on a Z-measured wire fold
                            // into a deterministic Z on the partner when the
                            // measured value is 1.
                            for (size_t pi = 0; pi < w.pending.size();) {
                                auto [u, v] = w.pending[pi];
                                if (u == q || v == q) {
                                    if (outcome) {
                                        size_t other = u == q ? v : u;
                                        w.err.set_z(other, !w.err.z_bit(other));
                                    }
                                    w.pending.erase(w.pending.begin() + static_cast<long>(pi));
                                } else {
                                    pi++;
                                }
                            }
                        }
                        w.flags[static_cast<size_t>(g.flag_id)] = flip ? 1 : 0;
                        w.err.clear_site(q);
                        break;
                    }
                    case GateKind::kIdealEc: {
                        if (g.ec_basis != EcBasis::kX) {
                            // Z or full correction measures X-type
                            // stabilizers, which do not commute with a
                            // pending dressing: expand everything first.
                            w.gate_index = gi;
                            expand_wire(w, SIZE_MAX, &stack);
                        }
                        Pauli data(p.num_data);
                        uint32_t bits = ec_syndrome(p, w, g.ec_basis, g.ec_frame, &data);
                        EcRecord rec;
                        rec.segment = w.segment;
                        rec.gate = static_cast<int>(gi);
                        rec.basis = g.ec_basis;
                        rec.syndrome_bits = bits;
                        rec.flags_at_time = w.flags;
                        rec.residual_before = data;
                        rec.residual_backframed = data;
                        if (g.ec_frame) {
                            Pauli lifted(p.num_wires());
                            for (size_t q = 0; q < p.num_data; q++) {
                                lifted.set_x(q, data.x_bit(q));
                                lifted.set_z(q, data.z_bit(q));
                            }
                            for (size_t fi2 = w.frame.size(); fi2-- > 0;) {
                                apply_clifford(w.frame[fi2], &lifted);
                            }
                            for (size_t q = 0; q < p.num_data; q++) {
                                rec.residual_backframed.set_x(q, lifted.x_bit(q));
                                rec.residual_backframed.set_z(q, lifted.z_bit(q));
                            }
                        }
                        bool terminal_seg = true;
                        for (const auto &r : seg.rules) {
                            if (r.kind != PolicyRule::kEnd) {
                                terminal_seg = false;
                            }
                        }
                        bool marker = terminal_seg && g.ec_basis == EcBasis::kFull &&
                                      gi + 1 == seg.circuit.gates.size();
                        rec.decode_marker = marker;
                        w.ec_records.push_back(std::move(rec));
                        if (!marker) {
                            // The applied X-type correction conjugates the
                            // dressing: CZ(u,v) under X_u gains Z_v.
                            if (g.ec_basis != EcBasis::kZ) {
                                for (size_t q = 0; q < p.num_data; q++) {
                                    if (!w.err.x_bit(q)) {
                                        continue;
                                    }
                                    for (const auto &[u, v] : w.pending) {
                                        if (u == q) {
                                            w.err.set_z(v, !w.err.z_bit(v));
                                        } else if (v == q) {
                                            w.err.set_z(u, !w.err.z_bit(u));
                                        }
                                    }
                                }
                            }
                            for (size_t q = 0; q < p.num_data; q++) {
                                if (g.ec_basis != EcBasis::kZ) {
                                    w.err.set_x(q, false);
                                }
                                if (g.ec_basis != EcBasis::kX) {
                                    w.err.set_z(q, false);
                                }
                            }
                            w.err.set_phase(0);
                        }
                        break;
                    }
                    default: {
                        // Unitary gate.  Diagonal data gates join the frame
                        // used by framed EC steps.
                        if (g.kind == GateKind::kZ || g.kind == GateKind::kCz || g.kind == GateKind::kCcz) {
                            bool data_only = true;
                            for (size_t wq : g.wires) {
                                if (wq >= p.num_data) {
                                    data_only = false;
                                }
                            }
                            if (data_only) {
                                w.frame.push_back(g);
                            }
                        }
                        switch (g.kind) {
                            case GateKind::kCcz: {
                                // Diagonal: pending pairs commute through.
                                size_t a = g.wires[0], b = g.wires[1], c = g.wires[2];
                                if (w.err.x_bit(a)) {
                                    xor_pair(&w.pending, b, c);
                                }
                                if (w.err.x_bit(b)) {
                                    xor_pair(&w.pending, a, c);
                                }
                                if (w.err.x_bit(c)) {
                                    xor_pair(&w.pending, a, b);
                                }
                                break;
                            }
                            case GateKind::kH:
                                w.gate_index = gi;
                                expand_wire(w, g.wires[0], &stack);
                                apply_clifford(g, &w.err);
                                break;
                            case GateKind::kX:
                            case GateKind::kY:
                            case GateKind::kG: {
                                // Basis-flipping single-qubit gates: a
                                // dressed pair on this wire gains a Z on the
                                // partner.
                                size_t q = g.wires[0];
                                for (const auto &[u, v] : w.pending) {
                                    if (u == q) {
                                        w.err.set_z(v, !w.err.z_bit(v));
                                    } else if (v == q) {
                                        w.err.set_z(u, !w.err.z_bit(u));
                                    }
                                }
                                apply_clifford(g, &w.err);
                                break;
                            }
                            case GateKind::kCnot: {
                                // z_t <- z_t + z_c rewrites pairs on t.
                                size_t c = g.wires[0], t = g.wires[1];
                                DressPairs adds;
                                for (const auto &[u, v] : w.pending) {
                                    if (u == t || v == t) {
                                        size_t other = u == t ? v : u;
                                        if (other == c) {
                                            // CZ(t,c) gains a bare Z_c.
                                            w.err.set_z(c, !w.err.z_bit(c));
                                        } else {
                                            adds.emplace_back(c, other);
                                        }
                                    }
                                }
                                for (const auto &[u, v] : adds) {
                                    xor_pair(&w.pending, u, v);
                                }
                                apply_clifford(g, &w.err);
                                break;
                            }
                            case GateKind::kPerm: {
                                for (auto &[u, v] : w.pending) {
                                    if (u < g.perm_map.size()) {
                                        u = g.perm_map[u];
                                    }
                                    if (v < g.perm_map.size()) {
                                        v = g.perm_map[v];
                                    }
                                    if (u > v) {
                                        std::swap(u, v);
                                    }
                                }
                                apply_clifford(g, &w.err);
                                break;
                            }
                            default:
                                apply_clifford(g, &w.err);
                                break;
                        }
                        break;
                    }
                }
                if (inject_here) {
                    w.err = w.err * loc->faults[static_cast<size_t>(inj.fault)];
                    w.injected = true;
                }
            }
            // Segment finished: evaluate policy.
            int next = -1;
            bool ended = true;
            for (const auto &r : seg.rules) {
                if (r.kind == PolicyRule::kEnd) {
                    break;
                }
                if (r.kind == PolicyRule::kGoto) {
                    next = r.target;
                    ended = false;
                    break;
                }
                bool any_nontrivial = false;
                if (r.flag_ids.empty()) {
                    for (int8_t f : w.flags) {
                        if (f == 1) {
                            any_nontrivial = true;
                        }
                    }
                } else {
                    for (int id : r.flag_ids) {
                        if (w.flags[static_cast<size_t>(id)] == 1) {
                            any_nontrivial = true;
                        }
                    }
                }
                if (r.kind == PolicyRule::kOnTrivial && !any_nontrivial) {
                    next = r.target;
                    ended = false;
                    break;
                }
                if (r.kind == PolicyRule::kOnNontrivial && any_nontrivial) {
                    next = r.target;
                    ended = false;
                    break;
                }
            }
            if (ended) {
                if (!w.pending.empty()) {
                    // Expand leftover dressings into terminal branches.
                    w.gate_index = seg.circuit.gates.size();
                    expand_pair(w, 0, &stack);
                    continue;
                }
                FaultBranch b;
                b.residual = Pauli(p.num_data);
                for (size_t q = 0; q < p.num_data; q++) {
                    b.residual.set_x(q, w.err.x_bit(q));
                    b.residual.set_z(q, w.err.z_bit(q));
                }
                b.residual.set_phase(w.err.phase());
                b.flags = w.flags;
                b.path = w.path;
                b.ec_records = std::move(w.ec_records);
                out.push_back(std::move(b));
                dead = true;
            } else {
                if (loc && !w.injected && loc->kind == FaultLocation::kIdle && loc->segment == next) {
                    w.err = w.err * loc->faults[static_cast<size_t>(inj.fault)];
                    w.injected = true;
                }
                w.segment = next;
                w.gate_index = 0;
                w.path.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FaultBranch &a, const FaultBranch &b) {
        if (a.flags != b.flags) {
            return a.flags < b.flags;
        }
        return a.residual < b.residual;
    });
    return out;
}

std::vector<FaultCase> enumerate_all_faults(const Protocol &p, const std::vector<FaultLocation> &locs, int jobs) {
    std::vector<Injection> injections;
    injections.push_back(Injection{});  // fault-free entry first
    for (size_t li = 0; li < locs.size(); li++) {
        size_t nf = locs[li].kind == FaultLocation::kMeasFlip ? 1 : locs[li].faults.size();
        for (size_t fi = 0; fi < nf; fi++) {
            injections.push_back(Injection{static_cast<int>(li), static_cast<int>(fi)});
        }
    }
    std::vector<FaultCase> out(injections.size());
    auto run_range = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; i++) {
            out[i].inj = injections[i];
            out[i].branches = propagate_fault(p, locs, injections[i]);
        }
    };
    if (jobs <= 1 || injections.size() < 64) {
        run_range(0, injections.size());
    } else {
        size_t chunk = (injections.size() + static_cast<size_t>(jobs) - 1) / static_cast<size_t>(jobs);
        std::vector<std::future<void>> futs;
        for (size_t lo = 0; lo < injections.size(); lo += chunk) {
            size_t hi = std::min(lo + chunk, injections.size());
            futs.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        for (auto &f : futs) {
            f.get();
        }
    }
    return out;
}

}  // namespace ftv
