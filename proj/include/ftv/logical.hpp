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

#ifndef FTV_LOGICAL_HPP
#define FTV_LOGICAL_HPP

#include <string>
#include <vector>

#include "ftv/circuit.hpp"
#include "ftv/code.hpp"

namespace ftv {

/// Conjugates a Pauli through a Clifford-only gate list.  Throws if the
/// list contains a CCZ, measurement, preparation, or EC step.
Pauli conjugate_clifford(const Circuit &c, const Pauli &p, size_t num_wires);

/// Claimed images of every logical X_i and Z_i under a Clifford circuit,
/// as k-qubit logical Paulis; phase bit 2 encodes a -1 sign.
struct LogicalCliffordClaim {
    std::vector<Pauli> x_images, z_images;

    static LogicalCliffordClaim identity(size_t k);
    static LogicalCliffordClaim permutation(size_t k, const std::vector<std::vector<size_t>> &cycles);
    static LogicalCliffordClaim transversal_h(size_t k);
    /// All-pairs controlled-Z composed with a transversal single-qubit map.
    static LogicalCliffordClaim all_pairs_cz_after_g(size_t k);
    bool is_symplectic() const;
};

/// A +-1 phase function on logical computational labels, given as a set of
/// multi-controlled-Z factors (each factor = subset of logical qubits;
/// singleton = logical Z).
struct DiagonalClaim {
    std::vector<std::vector<size_t>> factors;
};

struct DiagonalCheckResult {
    bool matches = false;           // phase function equals the claim
    bool valid_logical_op = true;   // phase constant on every codeword support
    std::vector<std::vector<size_t>> discovered;  // ANF monomials of the phase function
    std::string message;

    std::string discovered_str() const;
};

/// Does the circuit map every stabilizer generator into the stabilizer
/// group (sign allowed)?  `sign_flips` counts generators returning with -1.
bool check_code_preserving(const StabilizerCode &code, const Circuit &c, size_t *sign_flips = nullptr);

/// Conjugates each logical representative and compares with the claim
/// (signs mod 2).
bool check_clifford_claim(const StabilizerCode &code, const Circuit &c, const LogicalCliffordClaim &claim,
                          std::string *why = nullptr);

/// Evaluates the diagonal circuit's phase on every codeword basis support
/// and compares against the claim; pass claim.factors empty plus
/// `discover=true` to only compute the phase function.
DiagonalCheckResult check_diagonal_claim(const StabilizerCode &code, const Circuit &c, const DiagonalClaim &claim,
                                         bool discover = false);

/// CZ gates along the cycles of a code automorphism; 2-cycles contribute a
/// cancelling pair and are omitted.  Throws if the permutation is not an
/// automorphism.
Circuit permutation_to_cz_circuit(const StabilizerCode &code, const std::vector<std::vector<size_t>> &cycles);

std::vector<size_t> cycles_to_permutation_map(const std::vector<std::vector<size_t>> &cycles, size_t n);

}  // namespace ftv

#endif
