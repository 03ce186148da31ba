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

#ifndef FTV_VERIFIER_HPP
#define FTV_VERIFIER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ftv/circuit.hpp"
#include "ftv/engine.hpp"

namespace ftv {

/// Branches grouped by everything the decoder can see: flag outcomes,
/// mid-protocol EC observations, and the final syndrome.
struct Bucket {
    std::string flag_signature;   // '.' absent / '0' trivial / '1' nontrivial per flag
    std::string ec_signature;     // concatenated mid-EC syndrome observations
    Syndrome final_syndrome;
    struct Member {
        Pauli residual;
        int location;  // -1 for the fault-free branch
        int fault;
    };
    std::vector<Member> members;

    bool trivial_signature() const;
};

struct Counterexample {
    std::string kind;  // "undetected-logical" or "ambiguous-bucket"
    std::string bucket;
    int location_a, fault_a;
    int location_b, fault_b;  // -1s for detection-mode entries
    Pauli residual_a, residual_b;
    std::string detail;
};

struct VerificationReport {
    std::string scenario;
    ProtocolMode mode;
    bool pass = false;
    std::vector<Bucket> buckets;
    /// Correction per bucket signature, present when passing in correction
    /// mode: the representative residual whose inverse repairs every member.
    std::map<std::string, Pauli> decoder_table;
    std::vector<Counterexample> counterexamples;
    size_t location_count = 0;
    size_t fault_count = 0;
    size_t branch_count = 0;
    double seconds = 0;

    std::string text(const Protocol &p, const std::vector<FaultLocation> &locs) const;
};

struct VerifyOptions {
    FaultModel model;
    int jobs = 1;
    size_t max_counterexamples = 100;
};

VerificationReport check_detection(const Protocol &p, const VerifyOptions &opt = {});
VerificationReport check_correction(const Protocol &p, const VerifyOptions &opt = {});

/// Data-wire residuals over all single faults restricted to branches where
/// every executed measurement returned its expected value.  Phases dropped.
std::set<Pauli> gadget_residual_set(const Protocol &p, const VerifyOptions &opt = {});

/// Report for the flagged syndrome-extraction circuit: checks the
/// fault-free outcome, the flagged and unflagged error families, and the
/// distinct-syndrome property of the flagged Z chain.
struct SyndromeExtractionReport {
    bool pass = false;
    std::vector<std::string> failures;
    std::vector<Pauli> flagged_z_chain;  // distinct-syndrome representatives
};

SyndromeExtractionReport syndrome_extraction_check(const Protocol &p, const VerifyOptions &opt = {});

}  // namespace ftv

#endif
