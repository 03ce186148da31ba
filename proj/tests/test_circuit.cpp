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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftv/circuit.hpp"
#include "ftv/scenarios.hpp"

using namespace ftv;

namespace {

const char *kGadgetText = R"(
# combined gadget
code raw 2
mode detection
ancilla a0 b0
segment main
prepz a0
prepx b0
cnot 2 a0
cnot b0 1
cz 1 2
cz b0 2
cnot b0 1
cnot 2 a0
measz a0 expect 0 flag f0
measx b0 expect + flag f1
end
)";

}  // namespace

TEST_CASE("parse a gadget protocol") {
    Protocol p = parse_protocol(kGadgetText);
    CHECK(p.num_data == 2);
    CHECK(p.ancilla_names.size() == 2);
    CHECK(p.segments.size() == 1);
    CHECK(p.segments[0].circuit.gates.size() == 10);
    CHECK(p.flag_names == std::vector<std::string>{"f0", "f1"});
    CHECK(p.mode == ProtocolMode::kDetection);
}

TEST_CASE("parse then print then reparse is structurally identical") {
    for (const char *file : {"fig2c.dsl", "eq4-raw.dsl", "eq13.dsl", "ve-adaptive.dsl", "fig5c.dsl"}) {
        Protocol p = load_protocol_file(scenario_dir() + "/" + std::string(file));
        std::string printed = format_protocol(p);
        Protocol q = parse_protocol(printed);
        CHECK(format_protocol(q) == printed);
        CHECK(q.segments.size() == p.segments.size());
        for (size_t i = 0; i < p.segments.size(); i++) {
            CHECK(q.segments[i].circuit.gates.size() == p.segments[i].circuit.gates.size());
        }
    }
}

TEST_CASE("parser errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_protocol("code raw 2\nsegment m\nccz 1 1 2\n"),
                         doctest::Contains("repeated operand"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_protocol("code raw 2\nsegment m\ncnot 1 q7\n"),
                         doctest::Contains("undeclared qubit"), std::invalid_argument);
    CHECK_THROWS_AS(parse_protocol("code raw 2\nsegment m\nwope 1\n"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_protocol("code raw 2\nancilla a\nsegment m\nmeasz a expect 0 flag f\nmeasz a expect 0 flag f\n"),
        doctest::Contains("duplicate flag"), std::invalid_argument);
    // cyclic policy
    CHECK_THROWS_WITH_AS(parse_protocol("code raw 2\nsegment a\ngoto b\nsegment b\ngoto a\n"),
                         doctest::Contains("cyclic"), std::invalid_argument);
    // unreachable segment
    CHECK_THROWS_WITH_AS(parse_protocol("code raw 2\nsegment a\nend\nsegment b\nend\n"),
                         doctest::Contains("unreachable"), std::invalid_argument);
}

TEST_CASE("empty protocol is valid") {
    Protocol p = parse_protocol("code raw 3\nsegment main\nend\n");
    CHECK(p.segments.size() == 1);
    CHECK(p.segments[0].circuit.gates.empty());
    CHECK(fault_locations(p, FaultModel{}).empty());
}

TEST_CASE("fault locations for a single CZ") {
    Protocol p = parse_protocol("code raw 2\nsegment main\ncz 1 2\nend\n");
    auto locs = fault_locations(p, FaultModel{});
    REQUIRE(locs.size() == 1);
    CHECK(locs[0].faults.size() == 15);
    // deterministic lexicographic-in-letters order, identity skipped
    CHECK(locs[0].faults.front().restricted_to({0, 1}).str() == "XI");
}

TEST_CASE("fault location census of the combined gadget") {
    Protocol p = parse_protocol(kGadgetText);
    FaultModel m;
    auto locs = fault_locations(p, m);
    // 2 preps (2 effective faults each; the stabilizer of the fresh state
    // is no fault) + 6 two-qubit gates (15 each) + 2 meas flips
    size_t total = 0;
    for (const auto &l : locs) {
        total += l.kind == FaultLocation::kMeasFlip ? 1 : l.faults.size();
    }
    CHECK(locs.size() == 10);
    CHECK(total == 2 * 2 + 6 * 15 + 2);
    m.prep_faults = false;
    m.meas_flips = false;
    locs = fault_locations(p, m);
    CHECK(locs.size() == 6);
}

TEST_CASE("perm gates contribute no fault locations") {
    Protocol p = parse_protocol("code even 4\nsegment main\nperm (1 2)\nend\n");
    CHECK(fault_locations(p, FaultModel{}).empty());
}

TEST_CASE("idle faults materialize between segments only") {
    Protocol p = parse_protocol(
        "code even 4\nsegment a\nz 1\ngoto b\nsegment b\nz 2\nend\n");
    FaultModel m;
    auto locs = fault_locations(p, m);
    size_t idles = 0;
    for (const auto &l : locs) {
        if (l.kind == FaultLocation::kIdle) {
            idles++;
        }
    }
    CHECK(idles == 4);  // one per data qubit at the single boundary
    m.idle_faults = false;
    locs = fault_locations(p, m);
    for (const auto &l : locs) {
        CHECK(l.kind != FaultLocation::kIdle);
    }
}

TEST_CASE("fault-free path skips nontrivial-only segments") {
    Protocol p = parse_protocol(
        "code raw 2\nancilla a\nsegment main\nprepz a\ncnot 1 a\nmeasz a expect 0 flag f\n"
        "on nontrivial(f) goto rescue\non trivial goto done\n"
        "segment rescue\nx 1\nend\nsegment done\nend\n");
    auto path = fault_free_path(p);
    REQUIRE(path.size() == 2);
    CHECK(p.segments[static_cast<size_t>(path[0])].name == "main");
    CHECK(p.segments[static_cast<size_t>(path[1])].name == "done");
    // No fault is ever injected into the rescue segment.
    for (const auto &l : fault_locations(p, FaultModel{})) {
        CHECK(p.segments[static_cast<size_t>(l.segment)].name != "rescue");
    }
}
