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

#include "ftv/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ftv {

bool Gate::is_unitary() const {
    switch (kind) {
        case GateKind::kX:
        case GateKind::kY:
        case GateKind::kZ:
        case GateKind::kH:
        case GateKind::kS:
        case GateKind::kG:
        case GateKind::kCnot:
        case GateKind::kCz:
        case GateKind::kCcz:
            return true;
        default:
            return false;
    }
}

int Protocol::segment_index(const std::string &name) const {
    for (size_t i = 0; i < segments.size(); i++) {
        if (segments[i].name == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

namespace {

struct ParseCtx {
    Protocol proto;
    std::map<std::string, size_t> ancilla_index;  // name -> wire
    std::map<std::string, int> flag_index;
    std::vector<std::pair<int, std::string>> pending_gotos;  // rule site -> target name
    int cur_segment = -1;
    size_t line_no = 0;

    [[noreturn]] void fail(const std::string &msg) const {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    }

    Segment &seg() {
        if (cur_segment < 0) {
            // Implicit single segment for claim-only or simple scenarios.
            proto.segments.push_back(Segment{"main", {}, {}});
            const_cast<ParseCtx *>(this)->cur_segment = 0;
        }
        return proto.segments[static_cast<size_t>(cur_segment)];
    }

    size_t wire(const std::string &tok) {
        if (!tok.empty() && std::isdigit(static_cast<unsigned char>(tok[0]))) {
            unsigned long q = std::stoul(tok);
            if (q < 1 || q > proto.num_data) {
                fail("data qubit index out of range: " + tok);
            }
            return q - 1;
        }
        auto it = ancilla_index.find(tok);
        if (it == ancilla_index.end()) {
            fail("undeclared qubit: " + tok);
        }
        return it->second;
    }
};

std::string lower(std::string s) {
    for (auto &c : s) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return s;
}

std::vector<std::string> tokens_of(const std::string &line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : line) {
        if (c == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                toks.push_back(cur);
                cur.clear();
            }
        } else if (c == '(' || c == ')' || c == ',') {
            if (!cur.empty()) {
                toks.push_back(cur);
                cur.clear();
            }
            toks.push_back(std::string(1, c));
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        toks.push_back(cur);
    }
    return toks;
}

// Parses "( a b c ) ( d e )" token runs into cycles.
std::vector<std::vector<size_t>> parse_cycles(ParseCtx &ctx, const std::vector<std::string> &toks, size_t start,
                                              size_t limit) {
    std::vector<std::vector<size_t>> cycles;
    size_t i = start;
    while (i < toks.size()) {
        if (toks[i] != "(") {
            ctx.fail("expected '(' in permutation");
        }
        i++;
        std::vector<size_t> cyc;
        while (i < toks.size() && toks[i] != ")") {
            if (toks[i] == ",") {
                i++;
                continue;
            }
            unsigned long v = 0;
            try {
                v = std::stoul(toks[i]);
            } catch (...) {
                ctx.fail("bad permutation element: " + toks[i]);
            }
            if (v < 1 || v > limit) {
                ctx.fail("permutation element out of range: " + toks[i]);
            }
            cyc.push_back(v - 1);
            i++;
        }
        if (i >= toks.size()) {
            ctx.fail("unterminated permutation cycle");
        }
        i++;  // ')'
        if (cyc.size() < 2) {
            ctx.fail("permutation cycle needs at least two elements");
        }
        cycles.push_back(cyc);
    }
    return cycles;
}

std::vector<size_t> cycles_to_map(const std::vector<std::vector<size_t>> &cycles, size_t n) {
    std::vector<size_t> map(n);
    for (size_t q = 0; q < n; q++) {
        map[q] = q;
    }
    std::vector<bool> moved(n, false);
    for (const auto &cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); i++) {
            size_t from = cyc[i];
            size_t to = cyc[(i + 1) % cyc.size()];
            if (moved[from]) {
                throw std::invalid_argument("qubit repeated across permutation cycles");
            }
            moved[from] = true;
            map[from] = to;
        }
    }
    return map;
}

void add_gate(ParseCtx &ctx, GateKind kind, const std::vector<std::string> &toks, size_t arity) {
    if (toks.size() != 1 + arity) {
        ctx.fail("gate expects " + std::to_string(arity) + " operand(s)");
    }
    Gate g;
    g.kind = kind;
    for (size_t i = 1; i < toks.size(); i++) {
        g.wires.push_back(ctx.wire(toks[i]));
    }
    std::set<size_t> distinct(g.wires.begin(), g.wires.end());
    if (distinct.size() != g.wires.size()) {
        ctx.fail("repeated operand");
    }
    ctx.seg().circuit.gates.push_back(g);
}

void finish_validation(ParseCtx &ctx) {
    Protocol &p = ctx.proto;
    if (p.segments.empty()) {
        p.segments.push_back(Segment{"main", {}, {}});
    }
    // Resolve goto targets.
    for (auto &seg : p.segments) {
        (void)seg;
    }
    // Check ancillas are prepared before first use within each segment walk;
    // enforced dynamically by the engine, checked loosely here: every
    // measurement wire must be an ancilla or data wire (already resolved).
    // Policy graph acyclicity + reachability.
    size_t n_seg = p.segments.size();
    std::vector<std::vector<int>> out(n_seg);
    for (size_t i = 0; i < n_seg; i++) {
        for (const auto &r : p.segments[i].rules) {
            if (r.kind != PolicyRule::kEnd) {
                if (r.target < 0 || r.target >= static_cast<int>(n_seg)) {
                    throw std::invalid_argument("policy rule targets unknown segment");
                }
                out[i].push_back(r.target);
            }
        }
    }
    std::vector<int> state(n_seg, 0);
    std::function<void(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int w : out[static_cast<size_t>(v)]) {
            if (state[w] == 1) {
                throw std::invalid_argument("cyclic policy");
            }
            if (state[w] == 0) {
                dfs(w);
            }
        }
        state[v] = 2;
    };
    dfs(p.entry);
    for (size_t i = 0; i < n_seg; i++) {
        if (state[i] == 0) {
            throw std::invalid_argument("unreachable segment: " + p.segments[i].name);
        }
    }
}

}  // namespace

Protocol parse_protocol(const std::string &text) {
    ParseCtx ctx;
    std::istringstream in(text);
    std::string line;
    bool in_custom_code = false;
    std::string custom_code_text;
    while (std::getline(in, line)) {
        ctx.line_no++;
        if (in_custom_code) {
            if (line.find(">>") != std::string::npos) {
                in_custom_code = false;
                auto code = std::make_shared<StabilizerCode>(StabilizerCode::from_text("custom", custom_code_text));
                ctx.proto.code = code;
                ctx.proto.num_data = code->num_qubits();
            } else {
                custom_code_text += line + "\n";
            }
            continue;
        }
        auto toks = tokens_of(line);
        if (toks.empty()) {
            continue;
        }
        std::string kw = lower(toks[0]);
        if (kw == "code") {
            if (toks.size() < 2) {
                ctx.fail("code line needs an argument");
            }
            std::string which = lower(toks[1]);
            if (which == "even") {
                if (toks.size() != 3) {
                    ctx.fail("usage: code even <n>");
                }
                auto code = std::make_shared<StabilizerCode>(StabilizerCode::even_code(std::stoul(toks[2])));
                ctx.proto.code = code;
                ctx.proto.num_data = code->num_qubits();
            } else if (which == "hamming15") {
                auto code = std::make_shared<StabilizerCode>(StabilizerCode::hamming15());
                ctx.proto.code = code;
                ctx.proto.num_data = code->num_qubits();
            } else if (which == "raw") {
                if (toks.size() != 3) {
                    ctx.fail("usage: code raw <n>");
                }
                ctx.proto.code = nullptr;
                ctx.proto.num_data = std::stoul(toks[2]);
            } else if (which == "custom") {
                in_custom_code = true;
                custom_code_text.clear();
            } else {
                ctx.fail("unknown code: " + toks[1]);
            }
        } else if (kw == "ancilla") {
            for (size_t i = 1; i < toks.size(); i++) {
                if (ctx.ancilla_index.count(toks[i])) {
                    ctx.fail("ancilla redeclared: " + toks[i]);
                }
                if (std::isdigit(static_cast<unsigned char>(toks[i][0]))) {
                    ctx.fail("ancilla names cannot start with a digit");
                }
                ctx.ancilla_index[toks[i]] = ctx.proto.num_data + ctx.proto.ancilla_names.size();
                ctx.proto.ancilla_names.push_back(toks[i]);
            }
        } else if (kw == "segment") {
            if (toks.size() != 2) {
                ctx.fail("usage: segment <name>");
            }
            if (ctx.proto.segment_index(toks[1]) >= 0) {
                ctx.fail("segment redeclared: " + toks[1]);
            }
            ctx.proto.segments.push_back(Segment{toks[1], {}, {}});
            ctx.cur_segment = static_cast<int>(ctx.proto.segments.size()) - 1;
        } else if (kw == "mode") {
            if (toks.size() != 2) {
                ctx.fail("usage: mode detection|correction");
            }
            std::string m = lower(toks[1]);
            if (m == "detection") {
                ctx.proto.mode = ProtocolMode::kDetection;
            } else if (m == "correction") {
                ctx.proto.mode = ProtocolMode::kCorrection;
            } else {
                ctx.fail("unknown mode: " + toks[1]);
            }
        } else if (kw == "prepz" || kw == "prepx") {
            if (toks.size() != 2) {
                ctx.fail("usage: prepz|prepx <ancilla>");
            }
            Gate g;
            g.kind = kw == "prepz" ? GateKind::kPrepZ : GateKind::kPrepX;
            g.wires.push_back(ctx.wire(toks[1]));
            ctx.seg().circuit.gates.push_back(g);
        } else if (kw == "x" || kw == "y" || kw == "z" || kw == "h" || kw == "s" || kw == "g") {
            GateKind k = kw == "x"   ? GateKind::kX
                         : kw == "y" ? GateKind::kY
                         : kw == "z" ? GateKind::kZ
                         : kw == "h" ? GateKind::kH
                         : kw == "s" ? GateKind::kS
                                     : GateKind::kG;
            add_gate(ctx, k, toks, 1);
        } else if (kw == "cnot") {
            add_gate(ctx, GateKind::kCnot, toks, 2);
        } else if (kw == "cz") {
            add_gate(ctx, GateKind::kCz, toks, 2);
        } else if (kw == "ccz") {
            add_gate(ctx, GateKind::kCcz, toks, 3);
        } else if (kw == "perm") {
            auto cycles = parse_cycles(ctx, toks, 1, ctx.proto.num_data);
            Gate g;
            g.kind = GateKind::kPerm;
            try {
                g.perm_map = cycles_to_map(cycles, ctx.proto.num_data);
            } catch (const std::invalid_argument &e) {
                ctx.fail(e.what());
            }
            ctx.seg().circuit.gates.push_back(g);
        } else if (kw == "measz" || kw == "measx") {
            // measz a0 expect 0 [flag f1]
            if (toks.size() < 4 || lower(toks[2]) != "expect") {
                ctx.fail("usage: measz|measx <q> expect <0|1|+|-> [flag <name>]");
            }
            Gate g;
            g.kind = kw == "measz" ? GateKind::kMeasZ : GateKind::kMeasX;
            g.wires.push_back(ctx.wire(toks[1]));
            std::string e = toks[3];
            if (e == "0" || e == "+") {
                g.expect_nontrivial = false;
            } else if (e == "1" || e == "-") {
                g.expect_nontrivial = true;
            } else {
                ctx.fail("bad expected outcome: " + e);
            }
            std::string flag;
            if (toks.size() >= 6 && lower(toks[4]) == "flag") {
                flag = toks[5];
            } else if (toks.size() == 4) {
                flag = "m" + std::to_string(ctx.proto.flag_names.size() + 1);
            } else {
                ctx.fail("trailing tokens after measurement");
            }
            if (ctx.flag_index.count(flag)) {
                ctx.fail("duplicate flag label: " + flag);
            }
            ctx.flag_index[flag] = static_cast<int>(ctx.proto.flag_names.size());
            g.flag_id = static_cast<int>(ctx.proto.flag_names.size());
            ctx.proto.flag_names.push_back(flag);
            ctx.seg().circuit.gates.push_back(g);
        } else if (kw == "ecstep") {
            if (toks.size() < 2) {
                ctx.fail("usage: ecstep x|z|full [frame]");
            }
            Gate g;
            g.kind = GateKind::kIdealEc;
            std::string b = lower(toks[1]);
            if (b == "x") {
                g.ec_basis = EcBasis::kX;
            } else if (b == "z") {
                g.ec_basis = EcBasis::kZ;
            } else if (b == "full") {
                g.ec_basis = EcBasis::kFull;
            } else {
                ctx.fail("bad ecstep basis: " + toks[1]);
            }
            if (toks.size() == 3 && lower(toks[2]) == "frame") {
                g.ec_frame = true;
            } else if (toks.size() > 2) {
                ctx.fail("trailing tokens after ecstep");
            }
            if (!ctx.proto.code) {
                ctx.fail("ecstep requires a code");
            }
            ctx.seg().circuit.gates.push_back(g);
        } else if (kw == "on") {
            // on trivial goto X | on nontrivial goto X | on nontrivial ( f1 f2 ) goto X
            PolicyRule r;
            size_t i = 1;
            if (i >= toks.size()) {
                ctx.fail("incomplete policy rule");
            }
            std::string cond = lower(toks[i++]);
            if (cond == "trivial") {
                r.kind = PolicyRule::kOnTrivial;
            } else if (cond == "nontrivial") {
                r.kind = PolicyRule::kOnNontrivial;
                if (i < toks.size() && toks[i] == "(") {
                    i++;
                    while (i < toks.size() && toks[i] != ")") {
                        if (toks[i] == ",") {
                            i++;
                            continue;
                        }
                        auto it = ctx.flag_index.find(toks[i]);
                        if (it == ctx.flag_index.end()) {
                            ctx.fail("unknown flag in policy: " + toks[i]);
                        }
                        r.flag_ids.push_back(it->second);
                        i++;
                    }
                    if (i >= toks.size()) {
                        ctx.fail("unterminated flag list");
                    }
                    i++;
                }
            } else {
                ctx.fail("bad policy condition: " + cond);
            }
            if (i + 2 != toks.size() || lower(toks[i]) != "goto") {
                ctx.fail("policy rule must end with 'goto <segment>'");
            }
            ctx.seg().rules.push_back(r);
            ctx.pending_gotos.emplace_back(0, "");
            ctx.pending_gotos.back() = {ctx.cur_segment * 1000 + static_cast<int>(ctx.seg().rules.size()) - 1,
                                        toks[i + 1]};
        } else if (kw == "goto") {
            if (toks.size() != 2) {
                ctx.fail("usage: goto <segment>");
            }
            PolicyRule r;
            r.kind = PolicyRule::kGoto;
            ctx.seg().rules.push_back(r);
            ctx.pending_gotos.emplace_back(ctx.cur_segment * 1000 + static_cast<int>(ctx.seg().rules.size()) - 1,
                                           toks[1]);
        } else if (kw == "end") {
            PolicyRule r;
            r.kind = PolicyRule::kEnd;
            ctx.seg().rules.push_back(r);
        } else if (kw == "claim") {
            if (toks.size() < 2) {
                ctx.fail("incomplete claim");
            }
            std::string what = lower(toks[1]);
            Claim c;
            if (what == "discover") {
                c.kind = Claim::kDiscover;
            } else if (what == "code-preserving" || what == "preserving") {
                c.kind = Claim::kCodePreserving;
            } else if (what == "logical") {
                if (toks.size() < 3) {
                    ctx.fail("incomplete logical claim");
                }
                std::string op = lower(toks[2]);
                size_t k = ctx.proto.code ? ctx.proto.code->num_logical() : 0;
                if (op == "cz" || op == "ccz" || op == "z") {
                    c.kind = op == "cz" ? Claim::kLogicalCz : op == "ccz" ? Claim::kLogicalCcz : Claim::kLogicalCz;
                    size_t want = op == "ccz" ? 3 : op == "cz" ? 2 : 1;
                    if (toks.size() != 3 + want) {
                        ctx.fail("logical " + op + " claim expects " + std::to_string(want) + " qubits");
                    }
                    for (size_t i = 3; i < toks.size(); i++) {
                        unsigned long q = std::stoul(toks[i]);
                        if (q < 1 || q > k) {
                            ctx.fail("logical qubit out of range");
                        }
                        c.logical_qubits.push_back(q - 1);
                    }
                } else if (op == "perm") {
                    c.kind = Claim::kLogicalPerm;
                    c.cycles = parse_cycles(ctx, toks, 3, k);
                } else if (op == "htransversal") {
                    c.kind = Claim::kLogicalHTransversal;
                } else {
                    ctx.fail("unknown logical claim: " + op);
                }
            } else {
                ctx.fail("unknown claim: " + what);
            }
            ctx.proto.claims.push_back(c);
        } else {
            ctx.fail("unknown keyword: " + toks[0]);
        }
    }
    if (ctx.proto.num_data == 0) {
        throw std::invalid_argument("scenario declares no code line");
    }
    // Resolve gotos.
    for (auto &[site, target] : ctx.pending_gotos) {
        int seg = site / 1000;
        int rule = site % 1000;
        int t = ctx.proto.segment_index(target);
        if (t < 0) {
            throw std::invalid_argument("goto targets unknown segment: " + target);
        }
        ctx.proto.segments[static_cast<size_t>(seg)].rules[static_cast<size_t>(rule)].target = t;
    }
    finish_validation(ctx);
    return ctx.proto;
}

std::string format_protocol(const Protocol &p) {
    std::ostringstream out;
    if (!p.code) {
        out << "code raw " << p.num_data << "\n";
    } else if (p.code->name().rfind("even", 0) == 0) {
        out << "code even " << p.num_data << "\n";
    } else if (p.code->name() == "hamming15") {
        out << "code hamming15\n";
    } else {
        out << "code custom <<\n";
        for (const auto &g : p.code->generators()) {
            out << "stab " << g.str() << "\n";
        }
        for (const auto &l : p.code->logical_x()) {
            out << "logx " << l.str() << "\n";
        }
        for (const auto &l : p.code->logical_z()) {
            out << "logz " << l.str() << "\n";
        }
        out << ">>\n";
    }
    if (!p.ancilla_names.empty()) {
        out << "ancilla";
        for (const auto &a : p.ancilla_names) {
            out << " " << a;
        }
        out << "\n";
    }
    out << "mode " << (p.mode == ProtocolMode::kDetection ? "detection" : "correction") << "\n";
    auto wname = [&](size_t w) {
        if (w < p.num_data) {
            return std::to_string(w + 1);
        }
        return p.ancilla_names[w - p.num_data];
    };
    for (const auto &seg : p.segments) {
        out << "segment " << seg.name << "\n";
        for (const auto &g : seg.circuit.gates) {
            switch (g.kind) {
                case GateKind::kPrepZ:
                    out << "prepz " << wname(g.wires[0]);
                    break;
                case GateKind::kPrepX:
                    out << "prepx " << wname(g.wires[0]);
                    break;
                case GateKind::kX:
                    out << "x " << wname(g.wires[0]);
                    break;
                case GateKind::kY:
                    out << "y " << wname(g.wires[0]);
                    break;
                case GateKind::kZ:
                    out << "z " << wname(g.wires[0]);
                    break;
                case GateKind::kH:
                    out << "h " << wname(g.wires[0]);
                    break;
                case GateKind::kS:
                    out << "s " << wname(g.wires[0]);
                    break;
                case GateKind::kG:
                    out << "g " << wname(g.wires[0]);
                    break;
                case GateKind::kCnot:
                    out << "cnot " << wname(g.wires[0]) << " " << wname(g.wires[1]);
                    break;
                case GateKind::kCz:
                    out << "cz " << wname(g.wires[0]) << " " << wname(g.wires[1]);
                    break;
                case GateKind::kCcz:
                    out << "ccz " << wname(g.wires[0]) << " " << wname(g.wires[1]) << " " << wname(g.wires[2]);
                    break;
                case GateKind::kPerm: {
                    out << "perm";
                    std::vector<bool> done(g.perm_map.size(), false);
                    for (size_t q = 0; q < g.perm_map.size(); q++) {
                        if (done[q] || g.perm_map[q] == q) {
                            continue;
                        }
                        out << " (";
                        size_t cur = q;
                        bool first = true;
                        while (!done[cur]) {
                            if (!first) {
                                out << " ";
                            }
                            out << cur + 1;
                            done[cur] = true;
                            first = false;
                            cur = g.perm_map[cur];
                        }
                        out << ")";
                    }
                    break;
                }
                case GateKind::kMeasZ:
                case GateKind::kMeasX:
                    out << (g.kind == GateKind::kMeasZ ? "measz " : "measx ") << wname(g.wires[0]) << " expect "
                        << (g.kind == GateKind::kMeasZ ? (g.expect_nontrivial ? "1" : "0")
                                                       : (g.expect_nontrivial ? "-" : "+"))
                        << " flag " << p.flag_names[static_cast<size_t>(g.flag_id)];
                    break;
                case GateKind::kIdealEc:
                    out << "ecstep "
                        << (g.ec_basis == EcBasis::kX ? "x" : g.ec_basis == EcBasis::kZ ? "z" : "full");
                    if (g.ec_frame) {
                        out << " frame";
                    }
                    break;
            }
            out << "\n";
        }
        for (const auto &r : seg.rules) {
            switch (r.kind) {
                case PolicyRule::kOnTrivial:
                    out << "on trivial goto " << p.segments[static_cast<size_t>(r.target)].name << "\n";
                    break;
                case PolicyRule::kOnNontrivial:
                    out << "on nontrivial";
                    if (!r.flag_ids.empty()) {
                        out << "(";
                        for (size_t i = 0; i < r.flag_ids.size(); i++) {
                            out << (i ? "," : "") << p.flag_names[static_cast<size_t>(r.flag_ids[i])];
                        }
                        out << ")";
                    }
                    out << " goto " << p.segments[static_cast<size_t>(r.target)].name << "\n";
                    break;
                case PolicyRule::kGoto:
                    out << "goto " << p.segments[static_cast<size_t>(r.target)].name << "\n";
                    break;
                case PolicyRule::kEnd:
                    out << "end\n";
                    break;
            }
        }
    }
    return out.str();
}

std::vector<int> fault_free_path(const Protocol &p) {
    std::vector<int> path;
    int cur = p.entry;
    while (cur >= 0) {
        path.push_back(cur);
        const Segment &seg = p.segments[static_cast<size_t>(cur)];
        int next = -1;
        for (const auto &r : seg.rules) {
            // With no fault every executed flag is trivial.
            if (r.kind == PolicyRule::kOnTrivial || r.kind == PolicyRule::kGoto) {
                next = r.target;
                break;
            }
            if (r.kind == PolicyRule::kEnd) {
                break;
            }
            // kOnNontrivial never fires fault-free.
        }
        cur = next;
    }
    return path;
}

static void push_single_site_faults(std::vector<Pauli> *out, size_t wires_total, size_t wire) {
    for (char c : {'X', 'Y', 'Z'}) {
        out->push_back(Pauli::single(wires_total, wire, c));
    }
}

std::vector<FaultLocation> fault_locations(const Protocol &p, const FaultModel &model) {
    std::vector<FaultLocation> locs;
    size_t w_total = p.num_wires();
    auto path = fault_free_path(p);
    static const char letters[3] = {'X', 'Y', 'Z'};
    for (size_t pi = 0; pi < path.size(); pi++) {
        int si = path[pi];
        if (pi > 0 && model.idle_faults) {
            for (size_t q = 0; q < p.num_data; q++) {
                FaultLocation loc;
                loc.kind = FaultLocation::kIdle;
                loc.segment = si;
                loc.gate = -1;
                loc.idle_wire = q;
                push_single_site_faults(&loc.faults, w_total, q);
                locs.push_back(std::move(loc));
            }
        }
        const Segment &seg = p.segments[static_cast<size_t>(si)];
        for (size_t gi = 0; gi < seg.circuit.gates.size(); gi++) {
            const Gate &g = seg.circuit.gates[gi];
            if (g.is_unitary() && model.gate_faults) {
                FaultLocation loc;
                loc.kind = FaultLocation::kGateOutput;
                loc.segment = si;
                loc.gate = static_cast<int>(gi);
                size_t s = g.wires.size();
                size_t combos = 1;
                for (size_t i = 0; i < s; i++) {
                    combos *= 4;
                }
                // Lexicographic in letters I<X<Y<Z per wire, skipping identity.
                static const char lex[4] = {'I', 'X', 'Y', 'Z'};
                for (size_t c = 1; c < combos; c++) {
                    Pauli f = Pauli::identity(w_total);
                    size_t t = c;
                    bool nontrivial = false;
                    for (size_t i = 0; i < s; i++) {
                        char ch = lex[t % 4];
                        t /= 4;
                        if (ch != 'I') {
                            f = f * Pauli::single(w_total, g.wires[i], ch);
                            nontrivial = true;
                        }
                    }
                    if (nontrivial) {
                        loc.faults.push_back(f);
                    }
                }
                locs.push_back(std::move(loc));
            } else if (g.is_prep() && model.prep_faults) {
                FaultLocation loc;
                loc.kind = FaultLocation::kPrepOutput;
                loc.segment = si;
                loc.gate = static_cast<int>(gi);
                for (char c : letters) {
                    // A fault that stabilizes the fresh state is no fault.
                    if ((g.kind == GateKind::kPrepZ && c == 'Z') || (g.kind == GateKind::kPrepX && c == 'X')) {
                        continue;
                    }
                    loc.faults.push_back(Pauli::single(w_total, g.wires[0], c));
                }
                locs.push_back(std::move(loc));
            } else if (g.is_measurement() && model.meas_flips) {
                FaultLocation loc;
                loc.kind = FaultLocation::kMeasFlip;
                loc.segment = si;
                loc.gate = static_cast<int>(gi);
                locs.push_back(std::move(loc));
            }
        }
    }
    return locs;
}

std::string FaultLocation::describe(const Protocol &p) const {
    std::ostringstream out;
    const Segment &seg = p.segments[static_cast<size_t>(segment)];
    out << seg.name;
    if (kind == kIdle) {
        out << ":idle q" << idle_wire + 1;
        return out.str();
    }
    out << ":g" << gate + 1;
    const Gate &g = seg.circuit.gates[static_cast<size_t>(gate)];
    switch (g.kind) {
        case GateKind::kCnot:
            out << "(cnot)";
            break;
        case GateKind::kCz:
            out << "(cz)";
            break;
        case GateKind::kCcz:
            out << "(ccz)";
            break;
        case GateKind::kH:
            out << "(h)";
            break;
        case GateKind::kG:
            out << "(g)";
            break;
        case GateKind::kMeasZ:
        case GateKind::kMeasX:
            out << "(meas-flip)";
            break;
        case GateKind::kPrepZ:
        case GateKind::kPrepX:
            out << "(prep)";
            break;
        default:
            break;
    }
    return out.str();
}

}  // namespace ftv
