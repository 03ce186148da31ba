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

#include "ftv/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ftv {

bool Bucket::trivial_signature() const {
    for (char c : flag_signature) {
        if (c == '1') {
            return false;
        }
    }
    return true;
}

namespace {

std::string ec_signature_of(const FaultBranch &b) {
    std::ostringstream out;
    for (const auto &r : b.ec_records) {
        out << "s" << r.segment << "g" << r.gate << ":" << r.syndrome_bits << ";";
    }
    return out.str();
}

// Is `p` (pure X-type or pure Z-type pattern) in the span of the given
// generator subset?  The subsets hold at most a handful of rows, so the
// whole span is enumerated.
bool in_span(const StabilizerCode &code, const std::vector<size_t> &gen_idx, const Pauli &p) {
    size_t m = gen_idx.size();
    for (size_t sel = 0; sel < (size_t{1} << m); sel++) {
        Pauli e = Pauli::identity(code.num_qubits());
        for (size_t i = 0; i < m; i++) {
            if ((sel >> i) & 1) {
                e = e * code.generator(gen_idx[i]);
            }
        }
        if (e.same_pattern(p)) {
            return true;
        }
    }
    return false;
}

struct EnumerationResult {
    std::vector<FaultLocation> locs;
    std::vector<FaultCase> cases;
    size_t fault_count = 0;
    size_t branch_count = 0;
};

EnumerationResult enumerate(const Protocol &p, const VerifyOptions &opt) {
    EnumerationResult r;
    r.locs = fault_locations(p, opt.model);
    r.cases = enumerate_all_faults(p, r.locs, opt.jobs);
    for (const auto &c : r.cases) {
        if (c.inj.location >= 0) {
            r.fault_count++;
        }
        r.branch_count += c.branches.size();
    }
    return r;
}

void check_ec_well_defined(const Protocol &p, const std::vector<FaultCase> &cases, VerificationReport *rep,
                           size_t max_cex) {
    if (!p.code) {
        return;
    }
    const StabilizerCode &code = *p.code;
    struct Seen {
        Pauli residual;
        Pauli backframed;
        int location, fault;
    };
    std::map<std::string, std::vector<Seen>> groups;
    for (const auto &c : cases) {
        for (const auto &b : c.branches) {
            for (const auto &rec : b.ec_records) {
                if (rec.decode_marker) {
                    continue;
                }
                std::ostringstream key;
                key << rec.segment << "/" << rec.gate << "/" << rec.syndrome_bits << "/";
                for (int8_t f : rec.flags_at_time) {
                    key << (f < 0 ? '.' : f ? '1' : '0');
                }
                key << "/" << static_cast<int>(rec.basis);
                groups[key.str()].push_back(Seen{rec.residual_before, rec.residual_backframed, c.inj.location,
                                                 c.inj.fault});
            }
        }
    }
    for (auto &[key, seen] : groups) {
        for (size_t i = 1; i < seen.size() && rep->counterexamples.size() < max_cex; i++) {
            bool ok = true;
            EcBasis basis = static_cast<EcBasis>(std::stoi(key.substr(key.rfind('/') + 1)));
            if (basis == EcBasis::kX) {
                Pauli d = seen[0].residual * seen[i].residual;
                Pauli xpart(code.num_qubits());
                for (size_t q = 0; q < code.num_qubits(); q++) {
                    xpart.set_x(q, d.x_bit(q));
                }
                ok = in_span(code, code.x_type_generators(), xpart);
            } else if (basis == EcBasis::kZ) {
                Pauli d = seen[0].residual * seen[i].residual;
                Pauli zpart(code.num_qubits());
                for (size_t q = 0; q < code.num_qubits(); q++) {
                    zpart.set_z(q, d.z_bit(q));
                }
                ok = in_span(code, code.z_type_generators(), zpart);
            } else {
                ok = code.equivalent_mod_stabilizer(seen[0].backframed, seen[i].backframed);
            }
            if (!ok) {
                Counterexample cex;
                cex.kind = "ambiguous-ec-step";
                cex.bucket = key;
                cex.location_a = seen[0].location;
                cex.fault_a = seen[0].fault;
                cex.location_b = seen[i].location;
                cex.fault_b = seen[i].fault;
                cex.residual_a = seen[0].residual;
                cex.residual_b = seen[i].residual;
                cex.detail = "errors entering the same EC step with equal observations are inequivalent";
                rep->counterexamples.push_back(std::move(cex));
                rep->pass = false;
            }
        }
    }
}

}  // namespace

VerificationReport check_detection(const Protocol &p, const VerifyOptions &opt) {
    if (!p.code) {
        throw std::invalid_argument("detection check requires a code");
    }
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.mode = ProtocolMode::kDetection;
    rep.pass = true;
    auto er = enumerate(p, opt);
    rep.location_count = er.locs.size();
    rep.fault_count = er.fault_count;
    rep.branch_count = er.branch_count;
    const StabilizerCode &code = *p.code;
    // The fault-free run must be clean, else the scenario reconstruction
    // itself is broken.
    for (const auto &b : er.cases.front().branches) {
        if (!b.all_flags_trivial() || !b.residual.is_identity()) {
            rep.pass = false;
            Counterexample cex;
            cex.kind = "broken-fault-free-run";
            cex.location_a = -1;
            cex.fault_a = -1;
            cex.location_b = -1;
            cex.fault_b = -1;
            cex.residual_a = b.residual;
            cex.detail = "fault-free branch has flags " + b.flag_signature(p);
            rep.counterexamples.push_back(std::move(cex));
        }
    }
    for (const auto &c : er.cases) {
        for (const auto &b : c.branches) {
            if (!b.all_flags_trivial()) {
                continue;
            }
            Syndrome s = code.syndrome(b.residual);
            if (s.any()) {
                continue;
            }
            LogicalEffect e = code.logical_effect(b.residual);
            if (e.kind == LogicalEffect::kLogical) {
                rep.pass = false;
                if (rep.counterexamples.size() < opt.max_counterexamples) {
                    Counterexample cex;
                    cex.kind = "undetected-logical";
                    cex.location_a = c.inj.location;
                    cex.fault_a = c.inj.fault;
                    cex.location_b = -1;
                    cex.fault_b = -1;
                    cex.residual_a = b.residual;
                    cex.detail = "logical " + e.logical.str();
                    rep.counterexamples.push_back(std::move(cex));
                }
            }
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerificationReport check_correction(const Protocol &p, const VerifyOptions &opt) {
    if (!p.code) {
        throw std::invalid_argument("correction check requires a code");
    }
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.mode = ProtocolMode::kCorrection;
    rep.pass = true;
    auto er = enumerate(p, opt);
    rep.location_count = er.locs.size();
    rep.fault_count = er.fault_count;
    rep.branch_count = er.branch_count;
    const StabilizerCode &code = *p.code;

    std::map<std::string, size_t> bucket_of;
    for (const auto &c : er.cases) {
        for (const auto &b : c.branches) {
            Syndrome s = code.syndrome(b.residual);
            std::string sig = b.flag_signature(p);
            std::string ecs = ec_signature_of(b);
            std::string key = sig + "|" + ecs + "|" + s.str();
            auto it = bucket_of.find(key);
            if (it == bucket_of.end()) {
                it = bucket_of.emplace(key, rep.buckets.size()).first;
                Bucket bk;
                bk.flag_signature = sig;
                bk.ec_signature = ecs;
                bk.final_syndrome = s;
                rep.buckets.push_back(std::move(bk));
            }
            rep.buckets[it->second].members.push_back(Bucket::Member{b.residual, c.inj.location, c.inj.fault});
        }
    }
    std::sort(rep.buckets.begin(), rep.buckets.end(), [](const Bucket &a, const Bucket &b) {
        if (a.flag_signature != b.flag_signature) {
            return a.flag_signature < b.flag_signature;
        }
        if (a.ec_signature != b.ec_signature) {
            return a.ec_signature < b.ec_signature;
        }
        return a.final_syndrome < b.final_syndrome;
    });
    for (auto &bk : rep.buckets) {
        const Pauli &rep_err = bk.members.front().residual;
        for (size_t i = 1; i < bk.members.size(); i++) {
            if (!code.equivalent_mod_stabilizer(rep_err, bk.members[i].residual)) {
                rep.pass = false;
                if (rep.counterexamples.size() < opt.max_counterexamples) {
                    Counterexample cex;
                    cex.kind = "ambiguous-bucket";
                    cex.bucket = bk.flag_signature + "|" + bk.ec_signature + "|" + bk.final_syndrome.str();
                    cex.location_a = bk.members.front().location;
                    cex.fault_a = bk.members.front().fault;
                    cex.location_b = bk.members[i].location;
                    cex.fault_b = bk.members[i].fault;
                    cex.residual_a = rep_err;
                    cex.residual_b = bk.members[i].residual;
                    cex.detail = "same observations, inequivalent residuals";
                    rep.counterexamples.push_back(std::move(cex));
                }
            }
        }
    }
    check_ec_well_defined(p, er.cases, &rep, opt.max_counterexamples);
    if (rep.pass) {
        for (const auto &bk : rep.buckets) {
            rep.decoder_table[bk.flag_signature + "|" + bk.ec_signature + "|" + bk.final_syndrome.str()] =
                bk.members.front().residual;
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::set<Pauli> gadget_residual_set(const Protocol &p, const VerifyOptions &opt) {
    auto er = enumerate(p, opt);
    std::set<Pauli> out;
    for (const auto &c : er.cases) {
        for (const auto &b : c.branches) {
            if (!b.all_flags_trivial()) {
                continue;
            }
            Pauli r = b.residual;
            r.set_phase(0);
            out.insert(r);
        }
    }
    return out;
}

SyndromeExtractionReport syndrome_extraction_check(const Protocol &p, const VerifyOptions &opt) {
    if (!p.code) {
        throw std::invalid_argument("syndrome extraction check requires a code");
    }
    const StabilizerCode &code = *p.code;
    SyndromeExtractionReport rep;
    rep.pass = true;
    auto fail = [&](const std::string &msg) {
        rep.pass = false;
        rep.failures.push_back(msg);
    };
    // Which flags belong to X-basis measurements (the flag proper)?
    std::vector<bool> is_x_flag(p.flag_names.size(), false);
    for (const auto &seg : p.segments) {
        for (const auto &g : seg.circuit.gates) {
            if (g.kind == GateKind::kMeasX && g.flag_id >= 0) {
                is_x_flag[static_cast<size_t>(g.flag_id)] = true;
            }
        }
    }
    auto er = enumerate(p, opt);
    // Fault-free run: everything trivial.
    for (const auto &b : er.cases.front().branches) {
        if (!b.all_flags_trivial() || !b.residual.is_identity()) {
            fail("fault-free run is not clean");
        }
    }
    // Enumerate X-stabilizer span masks once for weight-mod-stabilizer checks.
    auto span_elems = [&](const std::vector<size_t> &idx) {
        std::vector<Pauli> elems;
        size_t m = idx.size();
        for (size_t sel = 0; sel < (size_t{1} << m); sel++) {
            Pauli e = Pauli::identity(code.num_qubits());
            for (size_t i = 0; i < m; i++) {
                if ((sel >> i) & 1) {
                    e = e * code.generator(idx[i]);
                }
            }
            e.set_phase(0);
            elems.push_back(e);
        }
        return elems;
    };
    auto x_stab = span_elems(code.x_type_generators());
    auto z_stab = span_elems(code.z_type_generators());

    std::map<Syndrome, Pauli> chain_classes;  // flagged Z-component classes by syndrome
    for (const auto &c : er.cases) {
        if (c.inj.location < 0) {
            continue;
        }
        for (const auto &b : c.branches) {
            bool x_flagged = false;
            for (size_t f = 0; f < b.flags.size(); f++) {
                if (is_x_flag[f] && b.flags[f] == 1) {
                    x_flagged = true;
                }
            }
            Pauli xpart(code.num_qubits()), zpart(code.num_qubits());
            for (size_t q = 0; q < code.num_qubits(); q++) {
                xpart.set_x(q, b.residual.x_bit(q));
                zpart.set_z(q, b.residual.z_bit(q));
            }
            size_t min_xw = SIZE_MAX;
            for (const Pauli &s : x_stab) {
                Pauli t = xpart * s;
                min_xw = std::min(min_xw, t.weight());
            }
            if (!x_flagged) {
                // Unflagged: total data error weight <= 1 up to stabilizers.
                size_t min_w = SIZE_MAX;
                for (const Pauli &sx : x_stab) {
                    for (const Pauli &sz : z_stab) {
                        Pauli t = b.residual * sx * sz;
                        min_w = std::min(min_w, t.weight());
                    }
                }
                if (min_w > 1) {
                    fail("unflagged branch leaves error of weight > 1: " + b.residual.sparse_str());
                }
            } else {
                if (min_xw > 1) {
                    fail("flagged branch leaves X component of weight > 1: " + b.residual.sparse_str());
                }
                // Z component class, canonical minimal-weight representative.
                Pauli best = zpart;
                for (const Pauli &s : z_stab) {
                    Pauli t = zpart * s;
                    t.set_phase(0);
                    if (t.weight() < best.weight() || (t.weight() == best.weight() && t < best)) {
                        best = t;
                    }
                }
                Syndrome syn = code.syndrome(zpart);
                auto it = chain_classes.find(syn);
                if (it == chain_classes.end()) {
                    chain_classes.emplace(syn, best);
                } else if (!code.equivalent_mod_stabilizer(it->second, best)) {
                    fail("two flagged Z components share a syndrome: " + it->second.sparse_str() + " vs " +
                         best.sparse_str());
                }
            }
        }
    }
    for (auto &[syn, rep_err] : chain_classes) {
        rep.flagged_z_chain.push_back(rep_err);
    }
    std::sort(rep.flagged_z_chain.begin(), rep.flagged_z_chain.end());
    return rep;
}

std::string VerificationReport::text(const Protocol &p, const std::vector<FaultLocation> &locs) const {
    std::ostringstream out;
    out << "scenario: " << scenario << "\n";
    out << "mode: " << (mode == ProtocolMode::kDetection ? "detection" : "correction") << "\n";
    out << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    out << "locations: " << location_count << "  faults: " << fault_count << "  branches: " << branch_count
        << "  seconds: " << seconds << "\n";
    if (!buckets.empty()) {
        out << "buckets: " << buckets.size() << "\n";
        for (const auto &b : buckets) {
            out << "  [" << b.flag_signature;
            if (!b.ec_signature.empty()) {
                out << " " << b.ec_signature;
            }
            out << " syn=" << b.final_syndrome.str() << "] members=" << b.members.size() << " rep="
                << b.members.front().residual.sparse_str() << "\n";
        }
    }
    for (const auto &cex : counterexamples) {
        out << "counterexample (" << cex.kind << "): ";
        if (cex.location_a >= 0) {
            out << locs[static_cast<size_t>(cex.location_a)].describe(p) << " fault "
                << (locs[static_cast<size_t>(cex.location_a)].kind == FaultLocation::kMeasFlip
                        ? std::string("flip")
                        : locs[static_cast<size_t>(cex.location_a)].faults[static_cast<size_t>(cex.fault_a)]
                              .sparse_str());
        } else {
            out << "no-fault";
        }
        out << " -> " << cex.residual_a.sparse_str();
        if (cex.location_b >= -1 && cex.kind != "undetected-logical") {
            out << "  vs  ";
            if (cex.location_b >= 0) {
                out << locs[static_cast<size_t>(cex.location_b)].describe(p) << " fault "
                    << (locs[static_cast<size_t>(cex.location_b)].kind == FaultLocation::kMeasFlip
                            ? std::string("flip")
                            : locs[static_cast<size_t>(cex.location_b)].faults[static_cast<size_t>(cex.fault_b)]
                                  .sparse_str());
            } else {
                out << "no-fault";
            }
            out << " -> " << cex.residual_b.sparse_str();
        }
        out << "  (" << cex.detail << ")\n";
    }
    return out.str();
}

}  // namespace ftv
