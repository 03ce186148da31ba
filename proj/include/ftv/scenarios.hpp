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

#ifndef FTV_SCENARIOS_HPP
#define FTV_SCENARIOS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ftv/circuit.hpp"
#include "ftv/verifier.hpp"

namespace ftv {

struct ScenarioResult {
    bool as_expected = false;
    std::string report;
    std::map<std::string, std::string> artifacts;  // stable key/value facts
};

/// A named verification scenario: the checks encode the expected verdicts
/// and artifact values, each tagged with its provenance
/// ([published] reproduced reference value, [derived] computed here by an
/// independent route, [defn] immediate consequence of definitions).
struct ScenarioEntry {
    std::string name;
    std::string section;
    std::string file;  // empty for computational scenarios with no DSL text
    std::string description;
    std::string expectation;
    std::function<ScenarioResult(const VerifyOptions &)> run;
};

const std::vector<ScenarioEntry> &scenario_registry();
const ScenarioEntry *find_scenario(const std::string &name);

std::string scenario_dir();
std::string read_text_file(const std::string &path);
Protocol load_protocol_file(const std::string &path);

/// Runs the claims attached to a protocol (code-preserving, logical
/// permutation/diagonal claims, discover).  Returns pass/fail plus a
/// rendering of any discovered diagonal action.
ScenarioResult run_protocol_claims(const Protocol &p);

/// The circuit equivalent to the adaptive targeted-Hadamard scenario's
/// data action, used for its logical claim.
Circuit targeted_hadamard_black_circuit(size_t n);

}  // namespace ftv

#endif
