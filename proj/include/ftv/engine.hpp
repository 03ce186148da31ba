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

#ifndef FTV_ENGINE_HPP
#define FTV_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftv/circuit.hpp"

namespace ftv {

/// Observation made by an ideal EC step on one branch: which step, what it
/// saw, and the data error it was asked to repair.
struct EcRecord {
    int segment;
    int gate;
    EcBasis basis;
    uint32_t syndrome_bits;
    std::vector<int8_t> flags_at_time;  // -1 absent, 0 trivial, 1 nontrivial
    Pauli residual_before;              // data-wire error entering the step
    Pauli residual_backframed;          // same error pulled back through the frame
    bool decode_marker = false;         // final decode point, no oracle repair
};

/// One outcome branch of a single injected fault.
struct FaultBranch {
    Pauli residual;              // final data-wire error
    std::vector<int8_t> flags;   // by flag id: -1 absent, 0 trivial, 1 nontrivial
    std::vector<int> path;       // segment indices executed
    std::vector<EcRecord> ec_records;

    bool all_flags_trivial() const;
    std::string flag_signature(const Protocol &p) const;
};

/// Conjugates a single Pauli through one unitary gate.  Clifford gates
/// return one element; CCZ returns the branch set {II,IZ,ZI,ZZ} on the
/// complementary legs of every X-carrying leg (branch phases dropped).
std::vector<Pauli> conjugate_through_gate(const Gate &g, const Pauli &p);

struct Injection {
    int location = -1;  // index into the fault_locations list, -1 = no fault
    int fault = -1;     // index into that location's fault list
};

/// Propagates one injected fault (or the fault-free run) through the whole
/// protocol tree and returns every terminal branch.
std::vector<FaultBranch> propagate_fault(const Protocol &p, const std::vector<FaultLocation> &locs,
                                         const Injection &inj);

struct FaultCase {
    Injection inj;
    std::vector<FaultBranch> branches;
};

/// Every location and fault propagated, in deterministic order, with the
/// fault-free entry first.  `jobs` > 1 parallelizes across locations.
std::vector<FaultCase> enumerate_all_faults(const Protocol &p, const std::vector<FaultLocation> &locs,
                                            int jobs = 1);

}  // namespace ftv

#endif
