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

#ifndef FTV_CIRCUIT_HPP
#define FTV_CIRCUIT_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ftv/code.hpp"
#include "ftv/pauli.hpp"

namespace ftv {

enum class GateKind {
    kPrepZ,
    kPrepX,
    kX,
    kY,
    kZ,
    kH,
    kS,
    kG,  // the Clifford reflection (X+Y)/sqrt2: X<->Y, Z->-Z
    kCnot,
    kCz,
    kCcz,
    kPerm,
    kMeasZ,
    kMeasX,
    kIdealEc,
};

enum class EcBasis { kX, kZ, kFull };

struct Gate {
    GateKind kind;
    std::vector<size_t> wires;           // operand wire indices
    bool expect_nontrivial = false;      // measurements: expected 1/- instead of 0/+
    int flag_id = -1;                    // measurements: index into Protocol::flag_names
    std::vector<size_t> perm_map;        // kPerm: wire -> image, data wires only
    EcBasis ec_basis = EcBasis::kFull;   // kIdealEc
    bool ec_frame = false;               // kIdealEc: decode in the CZ-deformed frame

    bool is_unitary() const;
    bool is_measurement() const { return kind == GateKind::kMeasZ || kind == GateKind::kMeasX; }
    bool is_prep() const { return kind == GateKind::kPrepZ || kind == GateKind::kPrepX; }
};

struct Circuit {
    std::vector<Gate> gates;
};

struct PolicyRule {
    enum Kind { kOnTrivial, kOnNontrivial, kGoto, kEnd };
    Kind kind = kEnd;
    std::vector<int> flag_ids;  // kOnNontrivial: fires if any listed flag is nontrivial (empty = any flag)
    int target = -1;            // segment index, for the goto kinds
};

struct Segment {
    std::string name;
    Circuit circuit;
    std::vector<PolicyRule> rules;  // evaluated in order; falls through to end
};

enum class ProtocolMode { kDetection, kCorrection };

/// Logical-action claims attached to a scenario.
struct Claim {
    enum Kind { kLogicalCz, kLogicalCcz, kLogicalPerm, kDiscover, kCodePreserving, kLogicalHTransversal };
    Kind kind;
    std::vector<size_t> logical_qubits;       // 0-based logical indices
    std::vector<std::vector<size_t>> cycles;  // kLogicalPerm, 0-based logical indices
};

/// A parsed verification scenario: a code, wire layout (data wires first,
/// then named ancillas), segments with an outcome-conditioned policy, and
/// optional logical-action claims.
struct Protocol {
    std::shared_ptr<const StabilizerCode> code;  // null for raw (uncoded) data qubits
    size_t num_data = 0;
    std::vector<std::string> ancilla_names;
    std::vector<std::string> flag_names;
    std::vector<Segment> segments;
    int entry = 0;
    ProtocolMode mode = ProtocolMode::kDetection;
    std::vector<Claim> claims;

    size_t num_wires() const { return num_data + ancilla_names.size(); }
    const Segment &segment(size_t i) const { return segments[i]; }
    int segment_index(const std::string &name) const;
};

/// Parses the line-oriented scenario language.  '#' starts a comment,
/// keywords are case-insensitive, data qubits are 1-based numbers and
/// ancillas are declared names.
///
/// Throws std::invalid_argument with "line N: ..." on malformed input.
Protocol parse_protocol(const std::string &text);

/// Renders a protocol back to scenario text (canonical form).
std::string format_protocol(const Protocol &p);

struct FaultModel {
    bool gate_faults = true;   // Pauli faults after every unitary gate (always on)
    bool idle_faults = true;   // one-qubit faults on data wires between segments
    bool meas_flips = true;    // classical flips of measurement outcomes
    bool prep_faults = true;   // one-qubit faults after preparations
};

/// One place a single fault can strike, with the faults that can occur
/// there. Order is deterministic: no-fault-path segment order, then gate
/// order, then Pauli lexicographic order.
struct FaultLocation {
    enum Kind { kGateOutput, kIdle, kPrepOutput, kMeasFlip };
    Kind kind;
    int segment = -1;   // segment index
    int gate = -1;      // gate index within the segment (-1 for idle)
    size_t idle_wire = 0;
    std::vector<Pauli> faults;  // over all wires; empty for kMeasFlip
    std::string describe(const Protocol &p) const;
};

/// Segments visited when no fault occurs (the unique fault-free path).
std::vector<int> fault_free_path(const Protocol &p);

std::vector<FaultLocation> fault_locations(const Protocol &p, const FaultModel &model);

}  // namespace ftv

#endif
